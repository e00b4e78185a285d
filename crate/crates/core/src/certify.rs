//! Certificate reports: every claimed property of a construction, checked by
//! direct computation and backed by a witness or an exhaustive scan.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cover::{
    build_cover, cohen_tits_signing, connection_set_s, heisenberg_cover, induced_odd_cover,
    lifted_connection, pairwise_noncommuting_check, verify_cover, CoverViolation, CoveringMap,
};
use crate::error::Result;
use crate::gain::degree_bound_search;
use crate::graph::{find_4cycle, find_cycle_of_length, girth, Girth};
use crate::groups::{element_order, pow, ExtraspecialElement, GroupSign};
use crate::modular::Prime;
use crate::spectral::{
    hermitian_eigenvalues, huang_degree_bound, symmetric_eigenvalues, Cluster, HermitianMatrix,
    SpectrumReport, Threshold,
};

/// Covers with at most this many vertices get a full spectrum in their report.
pub const SPECTRUM_VERTEX_LIMIT: usize = 500;
/// Bases with at most this many vertices get a degree-bound table.
pub const BOUND_VERTEX_LIMIT: usize = 243;
/// Girth search cap used by reports.
pub const GIRTH_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConnectionChecks {
    pub rank: usize,
    pub is_basis: bool,
    pub pairwise_noncommuting: bool,
    pub commutator_table_matches: bool,
    /// Every element of `S_±` has order `p` (plus) or `p²` (minus).
    pub element_orders_ok: bool,
    /// Central coordinate of `ε(s)^p` for `s` in `S` order (minus only).
    /// It depends only on the first coordinate of `s`.
    pub minus_power_centres: Option<Vec<u32>>,
    /// Every `ε(s)^p` is central and nontrivial (minus only).
    pub minus_powers_ok: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificateReport {
    pub construction: String,
    pub p: u32,
    pub d: usize,
    pub sign: Option<GroupSign>,
    pub vertices: usize,
    pub edges: usize,
    pub base_vertices: usize,
    pub fold: Option<usize>,
    pub expected_fold: usize,
    pub cover_violation: Option<CoverViolation>,
    /// Exhaustive common-neighbour scan.
    pub four_cycle_free: bool,
    pub four_cycle_witness: Option<[usize; 4]>,
    /// Exhaustive rooted search for a cycle of length `p`.
    pub p_cycle_present: Option<bool>,
    pub p_cycle_witness: Option<Vec<usize>>,
    pub girth: Option<Girth>,
    pub connection: Option<ConnectionChecks>,
    pub spectrum: Option<Vec<Cluster>>,
    pub degree_bounds: Option<Vec<Threshold>>,
    pub checks: BTreeMap<String, bool>,
    pub passed: bool,
}

fn cover_core(
    construction: String,
    p: u32,
    d: usize,
    sign: Option<GroupSign>,
    cm: &CoveringMap,
    expected_fold: usize,
    with_girth: bool,
) -> CertificateReport {
    let verdict = verify_cover(cm);
    let witness = find_4cycle(&cm.total);
    let spectrum = (cm.total.n() <= SPECTRUM_VERTEX_LIMIT).then(|| {
        let ev = symmetric_eigenvalues(cm.total.n(), &cm.total.adjacency_matrix())
            .expect("square adjacency");
        SpectrumReport::from_eigenvalues(ev, "cover adjacency").clusters
    });
    let mut checks = BTreeMap::new();
    checks.insert(
        "fold".to_owned(),
        verdict.as_ref().ok() == Some(&expected_fold),
    );
    checks.insert("four_cycle_free".to_owned(), witness.is_none());
    CertificateReport {
        construction,
        p,
        d,
        sign,
        vertices: cm.total.n(),
        edges: cm.total.edge_count(),
        base_vertices: cm.base.n(),
        fold: verdict.as_ref().ok().copied(),
        expected_fold,
        cover_violation: verdict.err(),
        four_cycle_free: witness.is_none(),
        four_cycle_witness: witness,
        p_cycle_present: None,
        p_cycle_witness: None,
        girth: with_girth.then(|| girth(&cm.total, GIRTH_CAP)),
        connection: None,
        spectrum,
        degree_bounds: None,
        checks,
        passed: false,
    }
}

fn finish(mut r: CertificateReport) -> CertificateReport {
    r.passed = r.checks.values().all(|&ok| ok);
    r
}

/// Checks on `S`, `ε(S)` and `S_±`.
pub fn connection_checks(p: Prime, d: usize, sign: GroupSign) -> Result<ConnectionChecks> {
    let s = connection_set_s(p, d)?;
    let nc = pairwise_noncommuting_check(&s, sign);
    let lifted = lifted_connection(p, d, sign)?;
    let q = u64::from(p.get());
    let want_order = match sign {
        GroupSign::Plus => q,
        GroupSign::Minus => q * q,
    };
    let element_orders_ok = lifted.iter().all(|g| element_order(sign, g) == want_order);
    // lifted[..2d] is ε(S) in the order A_1, B_1, A_2, …
    let powers: Vec<ExtraspecialElement> =
        lifted[..2 * d].iter().map(|g| pow(sign, g, q)).collect();
    let minus_powers_ok = (sign == GroupSign::Minus)
        .then(|| powers.iter().all(|t| t.is_central() && !t.is_identity()));
    let minus_power_centres =
        (sign == GroupSign::Minus).then(|| powers.iter().map(|t| t.z.value()).collect());
    Ok(ConnectionChecks {
        rank: s.rank(),
        is_basis: s.is_basis(),
        pairwise_noncommuting: nc.pairwise_noncommuting,
        commutator_table_matches: nc.matches_case_formula,
        element_orders_ok,
        minus_power_centres,
        minus_powers_ok,
    })
}

/// Certificate for `Cay(p_±^{1+2d}, S_±)`, or for its induced cover of
/// `C_p^{2d-1}` when `induced` is set.
pub fn certify_extraspecial(
    p: Prime,
    d: usize,
    sign: GroupSign,
    induced: bool,
    with_girth: bool,
) -> Result<CertificateReport> {
    let (cm, name, dims) = if induced {
        (
            induced_odd_cover(p, d, sign)?,
            "induced_extraspecial",
            2 * d - 1,
        )
    } else {
        (build_cover(p, d, sign)?, "extraspecial", 2 * d)
    };
    let pz = p.get() as usize;
    let mut r = cover_core(name.to_owned(), p.get(), d, Some(sign), &cm, pz, with_girth);
    let pc = find_cycle_of_length(&cm.total, pz);
    r.p_cycle_present = Some(pc.is_some());
    r.p_cycle_witness = pc;
    r.checks.insert(
        "p_cycle_matches_sign".to_owned(),
        r.p_cycle_present == Some(sign == GroupSign::Plus),
    );
    let checks = connection_checks(p, d, sign)?;
    r.checks.insert("s_is_basis".to_owned(), checks.is_basis);
    r.checks.insert(
        "pairwise_noncommuting".to_owned(),
        checks.pairwise_noncommuting,
    );
    r.checks.insert(
        "commutator_table".to_owned(),
        checks.commutator_table_matches,
    );
    r.checks
        .insert("element_orders".to_owned(), checks.element_orders_ok);
    if let Some(ok) = checks.minus_powers_ok {
        r.checks.insert("minus_powers".to_owned(), ok);
    }
    r.connection = Some(checks);
    if cm.base.n() <= BOUND_VERTEX_LIMIT {
        let search = degree_bound_search(p, dims, &[sign], None)?;
        r.degree_bounds = Some(
            search
                .best
                .iter()
                .map(|b| Threshold {
                    degree: b.degree,
                    min_s: b.min_s,
                })
                .collect(),
        );
    }
    Ok(finish(r))
}

/// Certificate for `Cay(H_d, S_d)` over `Q_d`.
pub fn certify_heisenberg(d: usize, with_girth: bool) -> Result<CertificateReport> {
    let cm = heisenberg_cover(d)?;
    let r = cover_core("heisenberg".to_owned(), 2, d, None, &cm, 2, with_girth);
    let mut r = r;
    if cm.base.n() <= BOUND_VERTEX_LIMIT {
        let a = cohen_tits_signing(d)?;
        let spectrum = hermitian_eigenvalues(&HermitianMatrix::from_real(a.n(), &a.to_f64())?)?;
        r.degree_bounds = Some(huang_degree_bound(&spectrum).thresholds());
    }
    Ok(finish(r))
}

/// Stable key-sorted JSON with a trailing newline.
pub fn to_sorted_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serialisable");
    let mut s = serde_json::to_string_pretty(&v).expect("serialisable");
    s.push('\n');
    s
}
