//! The full pairwise comparison of the two-dimensional catalog over F_3,
//! frozen from a computed run: most pairs already differ by fingerprint, the
//! five fingerprint-equal pairs are separated by the exhaustive GL_2(F_3)
//! search, and the diagonal finds the identity witness.

use trialgebra::catalog;
use trialgebra::isomorphism::{pairwise_report, PairVerdict};

#[test]
fn two_dimensional_entries_are_pairwise_distinct_over_f3() {
    let dim2: Vec<_> = catalog::entries()
        .iter()
        .filter(|e| e.dim == 2)
        .map(|e| e.instantiate(&e.default_assignment()).unwrap())
        .collect();
    let report = pairwise_report(&dim2, 3).unwrap();
    assert_eq!(report.labels.len(), 13);

    let idx = |id: &str| report.labels.iter().position(|l| l == id).unwrap();
    let searched_pairs = [
        ("TH2.1", "TH2.2"),
        ("TH2.1", "TH2.3"),
        ("TH2.2", "TH2.3"),
        ("TH2.5", "TH2.8"),
        ("TH2.7", "TH2.13"),
    ];

    for i in 0..13 {
        for j in 0..13 {
            let verdict = &report.verdicts[i][j];
            if i == j {
                // Reflexive, with the lexicographically least witness: the
                // identity is the first invertible alpha-commuting matrix.
                match verdict {
                    PairVerdict::FpIsomorphic { witness } => {
                        assert_eq!(witness, &vec![vec![1, 0], vec![0, 1]]);
                    }
                    other => panic!("diagonal {i} is {other:?}"),
                }
                continue;
            }
            let a = &report.labels[i];
            let b = &report.labels[j];
            let searched = searched_pairs
                .iter()
                .any(|&(x, y)| (x == a && y == b) || (x == b && y == a));
            if searched {
                assert!(
                    matches!(verdict, PairVerdict::FpDistinct),
                    "{a} vs {b}: {verdict:?}"
                );
            } else {
                assert!(
                    matches!(verdict, PairVerdict::DistinctByFingerprint),
                    "{a} vs {b}: {verdict:?}"
                );
            }
        }
    }

    // Symmetry of the search outcome on a fingerprint-equal pair.
    let (i, j) = (idx("TH2.5"), idx("TH2.8"));
    assert_eq!(report.verdicts[i][j], report.verdicts[j][i]);
    assert!(report.caveat.contains("evidence"));
}
