//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Every tolerance here is exact: dimensions are integers, memberships are
//! rank comparisons, and counts are equalities. Two tests assert claims that
//! the verified counterexamples in the committed discrepancy report show to
//! be false for the catalog as printed (criterion 5's total-sum and
//! Leibniz-Poisson clauses, and criterion 6); they are implemented as stated
//! and fail with the counterexample lists rather than being weakened.

use std::time::Instant;

use trialgebra::algebra::{HomTrialgebra, OpSelector};
use trialgebra::axioms::{all_passed, check_multiplicative, check_triassociativity};
use trialgebra::catalog::{self, Assignment, Discrepancy, SampleStrategy};
use trialgebra::constructions as cons;
use trialgebra::isomorphism::{
    self, all_matrices, fp_subspace_dims, reduce_mod_p, FpAlgebra, FpMat, PairVerdict,
};
use trialgebra::linalg::{prime_touches_scalar, scalar, scalar_ratio, Matrix, Scalar};
use trialgebra::subspaces::{
    ad_map, centroid_rows, centroid_space, closure_checks, derivation_space, derivation_system,
    inner_span, SignConvention,
};

fn axiom_passing_instances() -> Vec<(String, Assignment, HomTrialgebra)> {
    let mut out = Vec::new();
    for entry in catalog::entries() {
        for assignment in entry.sample_assignments() {
            let a = entry.instantiate(&assignment).unwrap();
            if all_passed(&check_triassociativity(&a)) {
                out.push((entry.id.to_string(), assignment, a));
            }
        }
    }
    out
}

#[test]
fn criterion_01_catalog_axiom_verification() {
    let start = Instant::now();
    let report = catalog::verify_catalog(SampleStrategy::WithSamples);
    let elapsed = start.elapsed();

    for id in catalog::list_entries() {
        assert!(
            report.axiom_status_is_accounted_for(id),
            "{id} neither passes all axioms nor appears in the discrepancy report"
        );
    }
    // Failing entries carry concrete witnesses.
    for d in &report.discrepancies {
        if let Discrepancy::AxiomFailure { witness, .. } = d {
            assert!(!witness.indices.is_empty());
            assert_ne!(witness.lhs, witness.rhs);
        }
    }
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "catalog verification took {elapsed:?}, budget is 10 s"
    );
    println!(
        "ACCEPTANCE 1: PASS (34 entries verified in {elapsed:?}; {} discrepancies recorded)",
        report.discrepancies.len()
    );
}

#[test]
fn criterion_02_centroid_table_reproduction() {
    let report = catalog::verify_catalog(SampleStrategy::DefaultsOnly);
    let anchors = [
        ("TH2.1", 1usize),
        ("TH2.4", 2),
        ("TH2.7", 1),
        ("TH2.13", 1),
        ("TH3.1", 3),
        ("TH3.6", 3),
        ("TH3.10", 2),
        ("TH3.20", 2),
    ];
    for (id, expected) in anchors {
        let cmp = report
            .table_comparisons
            .iter()
            .find(|c| c.id == id && c.space == "centroid")
            .unwrap_or_else(|| panic!("{id} has a printed centroid row"));
        assert_eq!(cmp.computed_dim, expected, "{id} centroid dimension");
        assert_eq!(cmp.stated_dim, expected, "{id} printed Dim column");
        assert!(cmp.pattern_matches, "{id} centroid pattern");
    }
    // Every printed centroid row either matches exactly or is covered by a
    // dim/pattern discrepancy.
    for cmp in report
        .table_comparisons
        .iter()
        .filter(|c| c.space == "centroid")
    {
        if cmp.dim_matches && cmp.pattern_matches {
            continue;
        }
        let reported = report.discrepancies.iter().any(|d| match d {
            Discrepancy::TableDimMismatch { id, space, .. }
            | Discrepancy::TablePatternMismatch { id, space } => {
                id == &cmp.id && space == "centroid"
            }
            _ => false,
        });
        assert!(reported, "{} centroid mismatch not reported", cmp.id);
    }
    println!("ACCEPTANCE 2: PASS (8 anchors exact; mismatching rows all land in the report)");
}

#[test]
fn criterion_03_inner_derivation_table_reproduction() {
    let report = catalog::verify_catalog(SampleStrategy::DefaultsOnly);
    let anchors = [("TH2.1", 1usize), ("TH3.1", 3), ("TH3.5", 2), ("TH3.19", 1)];
    for (id, expected) in anchors {
        let cmp = report
            .table_comparisons
            .iter()
            .find(|c| c.id == id && c.space == "inner-derivation")
            .unwrap_or_else(|| panic!("{id} has a printed inner-derivation row"));
        assert_eq!(cmp.computed_dim, expected, "{id} derivation dimension");
        assert!(cmp.pattern_matches, "{id} derivation pattern");
    }
    // The known internal conflicts surface with the solver's value recorded.
    for (id, solver_dim) in [("TH2.4", 1usize), ("TH3.14", 3)] {
        let cmp = report
            .table_comparisons
            .iter()
            .find(|c| c.id == id && c.space == "inner-derivation")
            .unwrap();
        assert_eq!(cmp.computed_dim, solver_dim, "{id} solver value");
        assert!(!cmp.pattern_matches, "{id} is a known pattern conflict");
        let flagged = report.discrepancies.iter().any(|d| {
            matches!(d, Discrepancy::TablePatternMismatch { id: did, space }
                if did == id && space == "inner-derivation")
        });
        assert!(flagged, "{id} conflict must surface in the report");
    }
    for cmp in report
        .table_comparisons
        .iter()
        .filter(|c| c.space == "inner-derivation")
    {
        if cmp.dim_matches && cmp.pattern_matches {
            continue;
        }
        let reported = report.discrepancies.iter().any(|d| match d {
            Discrepancy::TableDimMismatch { id, space, .. }
            | Discrepancy::TablePatternMismatch { id, space } => {
                id == &cmp.id && space == "inner-derivation"
            }
            _ => false,
        });
        assert!(reported, "{} derivation mismatch not reported", cmp.id);
    }
    println!("ACCEPTANCE 3: PASS (4 anchors exact; TH2.4 and TH3.14 conflicts surfaced)");
}

/// Direct evaluation of the minus-convention derivation conditions over F_p;
/// deliberately independent of the rational row assembly it cross-checks.
fn fp_is_derivation_minus(a: &FpAlgebra, m: &FpMat) -> bool {
    let p = a.p;
    let n = a.dim;
    if m.mul(&a.alpha) != a.alpha.mul(m) {
        return false;
    }
    for op in OpSelector::ALL {
        for i in 0..n {
            for j in 0..n {
                let prod: Vec<u32> = (0..n).map(|k| a.tensor_at(op, i, j, k)).collect();
                let lhs = m.apply(&prod);
                let mi = m.apply(&a.basis_vector(i));
                let mj = m.apply(&a.basis_vector(j));
                let t1 = a.multiply(op, &mi, &a.apply_twist(&a.basis_vector(j)));
                let t2 = a.multiply(op, &a.apply_twist(&a.basis_vector(i)), &mj);
                let rhs: Vec<u32> = t1
                    .iter()
                    .zip(&t2)
                    .map(|(u, v)| (u + p - v) % p)
                    .collect();
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Direct evaluation of the centroid conditions over F_p.
fn fp_is_centroid(a: &FpAlgebra, m: &FpMat) -> bool {
    let n = a.dim;
    if m.mul(&a.alpha) != a.alpha.mul(m) {
        return false;
    }
    for op in OpSelector::ALL {
        for i in 0..n {
            for j in 0..n {
                let prod: Vec<u32> = (0..n).map(|k| a.tensor_at(op, i, j, k)).collect();
                let lhs = m.apply(&prod);
                let mi = m.apply(&a.basis_vector(i));
                let mj = m.apply(&a.basis_vector(j));
                let half_l = a.multiply(op, &mi, &a.apply_twist(&a.basis_vector(j)));
                let half_r = a.multiply(op, &a.apply_twist(&a.basis_vector(i)), &mj);
                if lhs != half_l || lhs != half_r {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn criterion_04_finite_field_oracle_equivalence() {
    let start = Instant::now();
    let mut ran = 0;
    let mut skipped = 0;
    for entry in catalog::entries().iter().filter(|e| e.dim == 2) {
        let a = entry.instantiate(&entry.default_assignment()).unwrap();
        for space in ["derivations-minus", "centroid"] {
            let (system, dim) = match space {
                "derivations-minus" => {
                    let s = derivation_system(&a, SignConvention::Minus);
                    let d = 4 - s.rank();
                    (s, d)
                }
                _ => {
                    let s = centroid_rows(&a);
                    let d = 4 - s.rank();
                    (s, d)
                }
            };
            let pivots = system.rref().pivot_values;
            for p in [2u32, 3] {
                if pivots.iter().any(|v| prime_touches_scalar(v, p)) {
                    skipped += 1;
                    continue;
                }
                let Ok(fp) = reduce_mod_p(&a, p) else {
                    skipped += 1;
                    continue;
                };
                let count = all_matrices(p, 2)
                    .filter(|m| match space {
                        "derivations-minus" => fp_is_derivation_minus(&fp, m),
                        _ => fp_is_centroid(&fp, m),
                    })
                    .count();
                assert_eq!(
                    count,
                    (p as usize).pow(dim as u32),
                    "{} {} over F_{}: exhaustive count disagrees with rational dimension {}",
                    entry.id,
                    space,
                    p,
                    dim
                );
                ran += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(ran > 30, "too many skipped combinations ({ran} ran, {skipped} skipped)");
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "finite-field oracle took {elapsed:?}, budget is 5 s"
    );
    println!(
        "ACCEPTANCE 4: PASS ({ran} entry/space/prime combinations counted exactly, {skipped} skipped, {elapsed:?})"
    );
}

#[test]
fn criterion_05_constructions() {
    let mut total_sum_violations = Vec::new();
    let mut signed_sum_violations = Vec::new();
    let mut opposite_violations = Vec::new();
    let mut commutator_violations = Vec::new();
    let mut lp_iii_violations = Vec::new();

    for (id, assignment, a) in axiom_passing_instances() {
        let tag = if assignment.is_empty() {
            id.clone()
        } else {
            format!("{id}{assignment:?}")
        };
        if !cons::total_sum_product(&a).check().passed {
            total_sum_violations.push(tag.clone());
        }
        if !cons::signed_sum_product(&a).check().passed {
            signed_sum_violations.push(tag.clone());
        }
        if !all_passed(&cons::opposite(&a).reports) {
            opposite_violations.push(tag.clone());
        }
        if all_passed(&check_multiplicative(&a))
            && !cons::check_commutator_identity(&cons::commutator_pair(&a)).passed
        {
            commutator_violations.push(tag.clone());
        }
        if !cons::leibniz_poisson_pair(&a).check()[2].passed {
            lp_iii_violations.push(tag.clone());
        }
    }

    println!(
        "ACCEPTANCE 5: signed-sum violations {:?}; opposite violations {:?}; commutator violations {:?}; total-sum violations {:?}; lp-item-iii violations {:?}",
        signed_sum_violations,
        opposite_violations,
        commutator_violations,
        total_sum_violations,
        lp_iii_violations
    );
    assert!(signed_sum_violations.is_empty(), "signed-sum clause");
    assert!(opposite_violations.is_empty(), "opposite clause");
    assert!(commutator_violations.is_empty(), "commutator clause");
    // The two clauses below are false for the catalog as printed; the
    // counterexamples are hand-verified and recorded in the committed
    // discrepancy analysis. They are asserted as stated, not weakened.
    assert!(
        total_sum_violations.is_empty(),
        "ACCEPTANCE 5: FAIL - total-sum hom-associativity has counterexamples {total_sum_violations:?}: \
         on TH2.7 at basis triple (1,2,2), (e1*e2)*a(e2) = 4e1 but a(e1)*(e2*e2) = 6e1; \
         the expand-and-cancel argument needs a(x)|-(y|-z) = (x-|y)-|a(z), which no axiom supplies"
    );
    assert!(
        lp_iii_violations.is_empty(),
        "ACCEPTANCE 5: FAIL - Leibniz-Poisson item iii has counterexamples {lp_iii_violations:?}"
    );
    println!("ACCEPTANCE 5: PASS");
}

#[test]
fn criterion_06_adjoint_membership() {
    // Supporting evidence, verified first: the mixed identity the source
    // argument actually establishes holds on every axiom-passing entry:
    // ad_{a(z)}(x o y) = ad_z(x) o a(y) + a(x) o ad_z(y) for all three
    // products, where ad_z(x) = x -| z - z |- x.
    let mut mixed_failures = Vec::new();
    let mut membership_violations = Vec::new();

    for (id, assignment, a) in axiom_passing_instances() {
        let n = a.dim();
        let tag = if assignment.is_empty() {
            id.clone()
        } else {
            format!("{id}{assignment:?}")
        };
        for zi in 0..n {
            let z = a.basis_vector(zi);
            let twisted = ad_map(&a, &z);
            let mut untwisted = Matrix::zero(n, n);
            for i in 0..n {
                let ei = a.basis_vector(i);
                let l = a.multiply(OpSelector::Left, &ei, &z).unwrap();
                let r = a.multiply(OpSelector::Right, &z, &ei).unwrap();
                for q in 0..n {
                    *untwisted.at_mut(q, i) = &l[q] - &r[q];
                }
            }
            'mixed: for op in OpSelector::ALL {
                for i in 0..n {
                    for j in 0..n {
                        let lhs = twisted.apply(a.basis_product(op, i, j)).unwrap();
                        let di = untwisted.apply(&a.basis_vector(i)).unwrap();
                        let dj = untwisted.apply(&a.basis_vector(j)).unwrap();
                        let t1 = a.multiply(op, &di, &a.twist_of_basis(j)).unwrap();
                        let t2 = a.multiply(op, &a.twist_of_basis(i), &dj).unwrap();
                        let rhs: Vec<Scalar> = t1.iter().zip(&t2).map(|(u, v)| u + v).collect();
                        if lhs != rhs {
                            mixed_failures.push(tag.clone());
                            break 'mixed;
                        }
                    }
                }
            }
        }

        if !all_passed(&check_multiplicative(&a)) {
            continue;
        }
        let der_plus = derivation_space(&a, SignConvention::Plus);
        let all_in = (0..n).all(|i| der_plus.contains(&ad_map(&a, &a.basis_vector(i))));
        let inner_contained = inner_span(&a)
            .basis
            .iter()
            .all(|m| der_plus.contains(m));
        if !all_in || !inner_contained {
            membership_violations.push(tag);
        }
    }

    assert!(
        mixed_failures.is_empty(),
        "the mixed adjoint identity itself failed on {mixed_failures:?}"
    );
    println!(
        "ACCEPTANCE 6: mixed adjoint identity holds on every axiom-passing entry; literal membership violations {membership_violations:?}"
    );
    // This is the claim as stated; it is false for TH2.5 and TH2.6, whose
    // twisted adjoints fail both the twist-commutant and the Leibniz rows
    // (hand check on TH2.6: ad_{e2} = [[1,-1],[0,0]], a(ad(e2)) = -e1 but
    // ad(a(e2)) = 0). Asserted as stated, not weakened.
    assert!(
        membership_violations.is_empty(),
        "ACCEPTANCE 6: FAIL - ad maps are not plus-convention derivations on {membership_violations:?}"
    );
    println!("ACCEPTANCE 6: PASS");
}

#[test]
fn criterion_07_closure_propositions() {
    let mut checked = 0;
    for (id, _assignment, a) in axiom_passing_instances() {
        let report = closure_checks(&a, SignConvention::Plus);
        assert!(
            report.all_hold(),
            "closure propositions fail on {id}: {report:?}"
        );
        checked += 1;
    }
    assert!(checked >= 29, "expected most entries to pass the axioms, got {checked}");
    println!("ACCEPTANCE 7: PASS (all four closure clauses hold on {checked} axiom-passing instances)");
}

#[test]
fn criterion_08_dimension_range_corollaries() {
    let report = catalog::verify_catalog(SampleStrategy::WithSamples);
    for e in &report.entries {
        let dim2 = e.id.starts_with("TH2");
        let cent_hi = if dim2 { 2 } else { 3 };
        assert!(
            e.dims.centroid <= cent_hi,
            "{} centroid dimension {} outside 0..={}",
            e.id,
            e.dims.centroid,
            cent_hi
        );
        // Inner-derivation dims are reported against the corollary range;
        // any violation must be a recorded discrepancy, not hidden.
        let der_hi = if dim2 { 1 } else { 3 };
        if e.dims.derivations_minus > der_hi {
            let flagged = report.discrepancies.iter().any(|d| {
                matches!(d, Discrepancy::RangeViolation { id, space, .. }
                    if id == &e.id && space == "derivations-minus")
            });
            assert!(flagged, "{} out-of-range derivation dim not reported", e.id);
        }
    }
    // The known TH2.4 conflict is flagged, not hidden.
    let th24_flagged = report.discrepancies.iter().any(|d| {
        matches!(d, Discrepancy::TablePatternMismatch { id, space }
            if id == "TH2.4" && space == "inner-derivation")
    });
    assert!(th24_flagged, "TH2.4 conflict must appear in the report");
    println!("ACCEPTANCE 8: PASS (centroid ranges hold; derivation ranges reported; TH2.4 flagged)");
}

#[test]
fn criterion_09_isomorphism_evidence() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    let start = Instant::now();
    let dim2: Vec<HomTrialgebra> = catalog::entries()
        .iter()
        .filter(|e| e.dim == 2)
        .map(|e| e.instantiate(&e.default_assignment()).unwrap())
        .collect();
    assert_eq!(dim2.len(), 13);
    let report = isomorphism::pairwise_report(&dim2, 3).unwrap();
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "pairwise report took {elapsed:?}, budget is 30 s"
    );

    let idx = |id: &str| report.labels.iter().position(|l| l == id).unwrap();
    assert!(matches!(
        report.verdicts[idx("TH2.1")][idx("TH2.4")],
        PairVerdict::DistinctByFingerprint
    ));
    let f1 = isomorphism::fingerprint(&dim2[idx("TH2.1")]);
    let f4 = isomorphism::fingerprint(&dim2[idx("TH2.4")]);
    assert_eq!(f1.dim_centroid, 1);
    assert_eq!(f4.dim_centroid, 2);

    // Fingerprint invariance under 20 random GL_2(F_3) transports per entry.
    let mut rng = StdRng::seed_from_u64(0x5eed_cafe);
    for a in &dim2 {
        let fp = reduce_mod_p(a, 3).unwrap();
        let base = fp_subspace_dims(&fp);
        for _ in 0..20 {
            let g = loop {
                let entries: Vec<u32> = (0..4).map(|_| rng.gen_range(0..3)).collect();
                let g = FpMat::new(3, 2, entries);
                if g.is_invertible() {
                    break g;
                }
            };
            let transported = fp.transport(&g);
            assert_eq!(
                fp_subspace_dims(&transported),
                base,
                "{:?} dims changed under transport",
                a.label()
            );
        }
    }
    println!(
        "ACCEPTANCE 9: PASS (13x13 pairwise report in {elapsed:?}; TH2.1/TH2.4 split by centroid dims 1 vs 2; invariance under 260 transports)"
    );
}

#[test]
fn criterion_10_solver_properties() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    let mut rng = StdRng::seed_from_u64(0xacce97);
    for round in 0..200 {
        let rows = rng.gen_range(1..=12);
        let cols = rng.gen_range(1..=12);
        let entries: Vec<Scalar> = (0..rows * cols)
            .map(|_| {
                if rng.gen_bool(0.35) {
                    scalar(0)
                } else {
                    scalar_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5))
                }
            })
            .collect();
        let m = Matrix::new(rows, cols, entries).unwrap();
        let rank = m.rank();
        let basis = m.nullspace_basis();
        assert_eq!(rank + basis.len(), cols, "rank-nullity on round {round}");
        for v in &basis {
            assert!(
                trialgebra::linalg::annihilates(&m, v),
                "back-substitution not exactly zero on round {round}"
            );
        }
        let once = m.rref().reduced;
        assert_eq!(once, once.rref().reduced, "rref idempotence on round {round}");
    }
    println!("ACCEPTANCE 10: PASS (200 random matrices up to 12x12, exact rank-nullity and idempotence)");
}

// ---------------------------------------------------------------------------
// Committed artifacts stay in sync with the code that generates them.
// ---------------------------------------------------------------------------

fn repo_path(rel: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join(rel)
}

#[test]
fn committed_catalog_files_match_export() {
    for entry in catalog::entries() {
        let a = entry.instantiate(&entry.default_assignment()).unwrap();
        let expected = trialgebra::algebra::AlgebraFile::from_algebra(&a).to_json();
        let path = repo_path(&format!("data/catalog/{}.json", entry.id));
        let on_disk = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("{} missing: {e}", path.display()));
        assert_eq!(on_disk, expected, "{} is stale; rerun `catalog export`", entry.id);
    }
}

#[test]
fn committed_discrepancy_report_matches_regeneration() {
    let report = catalog::verify_catalog(SampleStrategy::WithSamples).to_json();
    let path = repo_path("reports/discrepancy.json");
    let on_disk = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{} missing: {e}", path.display()));
    assert_eq!(
        on_disk, report,
        "committed discrepancy report is stale; rerun `catalog verify --format json`"
    );
}

#[test]
fn round_trip_through_the_file_format_is_identity() {
    let mut checked = 0;
    for entry in catalog::entries() {
        let a = entry.instantiate(&entry.default_assignment()).unwrap();
        let text = trialgebra::algebra::AlgebraFile::from_algebra(&a).to_json();
        let back = trialgebra::algebra::AlgebraFile::parse_json(entry.id, &text).unwrap();
        assert_eq!(back, a);
        checked += 1;
    }
    assert_eq!(checked, 34);
}

#[test]
fn solver_soundness_every_basis_element_satisfies_its_system() {
    for entry in catalog::entries() {
        let a = entry.instantiate(&entry.default_assignment()).unwrap();
        for conv in [SignConvention::Minus, SignConvention::Plus] {
            let system = derivation_system(&a, conv);
            let space = derivation_space(&a, conv);
            assert!(
                trialgebra::subspaces::satisfies_system(&system, &space),
                "{} derivations",
                entry.id
            );
        }
        let system = centroid_rows(&a);
        let (space, _) = centroid_space(&a);
        assert!(
            trialgebra::subspaces::satisfies_system(&system, &space),
            "{} centroid",
            entry.id
        );
    }
}
