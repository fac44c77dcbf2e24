//! Deciders for the defining identities, with explicit witnesses on failure:
//! the nine Hom-triassociativity axioms, multiplicativity of the twist,
//! Hom-associativity, Hom-Leibniz, and the Hom-Leibniz-Poisson compatibility.
//!
//! Everything here is brute-force evaluation over basis tuples. That is
//! deliberate: these checks are the oracle the rest of the crate is verified
//! against, so they stay as close to the definitions as possible.

use crate::algebra::{HomTrialgebra, OpSelector, ProductTensor, TwistMap};
use crate::linalg::{Scalar, Vector};
use serde::Serialize;

/// A failed instance of an identity: basis indices (1-based), the output
/// component (1-based), and the two disagreeing values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Basis indices of the instantiation, usually a triple `(i, j, k)`;
    /// pair-shaped identities (multiplicativity) carry two indices.
    pub indices: Vec<usize>,
    pub component: usize,
    #[serde(with = "scalar_string")]
    pub lhs: Scalar,
    #[serde(with = "scalar_string")]
    pub rhs: Scalar,
}

/// Outcome of checking one identity on every basis tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub identity: String,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
}

impl AxiomReport {
    fn from_witnesses(identity: &str, witnesses: Vec<Witness>) -> Self {
        AxiomReport {
            identity: identity.to_string(),
            passed: witnesses.is_empty(),
            witnesses,
        }
    }
}

pub(crate) mod scalar_string {
    use super::Scalar;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(s: &Scalar, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&s.to_string())
    }

    #[allow(dead_code)]
    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Scalar, D::Error> {
        let text = String::deserialize(de)?;
        Scalar::from_str(&text).map_err(serde::de::Error::custom)
    }
}

/// One side of a twisted associativity-type identity.
#[derive(Debug, Clone, Copy)]
enum Side {
    /// `(x ∘inner y) ∘outer α(z)`
    ProdThenTwist { inner: OpSelector, outer: OpSelector },
    /// `α(x) ∘outer (y ∘inner z)`
    TwistThenProd { outer: OpSelector, inner: OpSelector },
}

fn eval_side(a: &HomTrialgebra, side: Side, i: usize, j: usize, k: usize) -> Vector {
    match side {
        Side::ProdThenTwist { inner, outer } => {
            let xy = a.basis_product(inner, i, j).to_vec();
            let az = a.twist_of_basis(k);
            a.multiply(outer, &xy, &az).expect("dims agree")
        }
        Side::TwistThenProd { outer, inner } => {
            let ax = a.twist_of_basis(i);
            let yz = a.basis_product(inner, j, k).to_vec();
            a.multiply(outer, &ax, &yz).expect("dims agree")
        }
    }
}

fn diff_witnesses(indices: &[usize], lhs: &[Scalar], rhs: &[Scalar], out: &mut Vec<Witness>) {
    for (r, (l, rr)) in lhs.iter().zip(rhs).enumerate() {
        if l != rr {
            out.push(Witness {
                indices: indices.to_vec(),
                component: r + 1,
                lhs: l.clone(),
                rhs: rr.clone(),
            });
        }
    }
}

use OpSelector::{Left as L, Middle as M, Right as R};

fn axiom_chains() -> [(&'static str, Vec<Side>); 9] {
    let pt = |inner, outer| Side::ProdThenTwist { inner, outer };
    let tp = |outer, inner| Side::TwistThenProd { outer, inner };
    [
        ("Ax1", vec![pt(L, L), tp(L, L)]),
        ("Ax2", vec![pt(L, L), tp(L, R), tp(L, M)]),
        ("Ax3", vec![pt(R, L), tp(R, L)]),
        ("Ax4", vec![pt(L, R), tp(R, R), pt(M, R)]),
        ("Ax5", vec![pt(R, R), tp(R, R)]),
        ("Ax6", vec![pt(M, L), tp(M, L)]),
        ("Ax7", vec![pt(L, M), tp(M, R)]),
        ("Ax8", vec![pt(R, M), tp(R, M)]),
        ("Ax9", vec![pt(M, M), tp(M, M)]),
    ]
}

/// Checks the nine defining axioms on all basis triples. Chained equalities
/// (axioms 2 and 4) are verified pairwise along the chain and reported as one
/// identity.
pub fn check_triassociativity(a: &HomTrialgebra) -> Vec<AxiomReport> {
    let n = a.dim();
    axiom_chains()
        .into_iter()
        .map(|(id, chain)| {
            let mut witnesses = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let sides: Vec<Vector> = chain
                            .iter()
                            .map(|&s| eval_side(a, s, i, j, k))
                            .collect();
                        for pair in sides.windows(2) {
                            diff_witnesses(
                                &[i + 1, j + 1, k + 1],
                                &pair[0],
                                &pair[1],
                                &mut witnesses,
                            );
                        }
                    }
                }
            }
            AxiomReport::from_witnesses(id, witnesses)
        })
        .collect()
}

/// Checks `α(x ∘ y) = α(x) ∘ α(y)` for each of the three products.
pub fn check_multiplicative(a: &HomTrialgebra) -> Vec<AxiomReport> {
    let n = a.dim();
    OpSelector::ALL
        .iter()
        .map(|&op| {
            let id = format!("mult-{}", op.symbol());
            let mut witnesses = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let lhs = a
                        .apply_twist(a.basis_product(op, i, j))
                        .expect("dims agree");
                    let rhs = a
                        .multiply(op, &a.twist_of_basis(i), &a.twist_of_basis(j))
                        .expect("dims agree");
                    diff_witnesses(&[i + 1, j + 1], &lhs, &rhs, &mut witnesses);
                }
            }
            AxiomReport::from_witnesses(&id, witnesses)
        })
        .collect()
}

fn eval2(t: &ProductTensor, x: &[Scalar], y: &[Scalar]) -> Vector {
    t.evaluate(x, y).expect("dims agree")
}

/// Checks `(x ∗ y) ∗ α(z) = α(x) ∗ (y ∗ z)` for a single product.
pub fn check_hom_associative(t: &ProductTensor, alpha: &TwistMap) -> AxiomReport {
    assert_eq!(t.dim(), alpha.dim());
    let n = t.dim();
    let mut witnesses = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let xy = t.basis_product(i, j);
                let lhs = eval2(t, xy, &alpha.basis_image(k));
                let yz = t.basis_product(j, k);
                let rhs = eval2(t, &alpha.basis_image(i), yz);
                diff_witnesses(&[i + 1, j + 1, k + 1], &lhs, &rhs, &mut witnesses);
            }
        }
    }
    AxiomReport::from_witnesses("hom-assoc", witnesses)
}

/// Checks the right Hom-Leibniz identity
/// `[[x,y], α(z)] = [[x,z], α(y)] + [α(x), [y,z]]`.
pub fn check_hom_leibniz(bracket: &ProductTensor, alpha: &TwistMap) -> AxiomReport {
    assert_eq!(bracket.dim(), alpha.dim());
    let n = bracket.dim();
    let mut witnesses = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = eval2(bracket, bracket.basis_product(i, j), &alpha.basis_image(k));
                let t1 = eval2(bracket, bracket.basis_product(i, k), &alpha.basis_image(j));
                let t2 = eval2(bracket, &alpha.basis_image(i), bracket.basis_product(j, k));
                let rhs: Vector = t1.iter().zip(&t2).map(|(u, v)| u + v).collect();
                diff_witnesses(&[i + 1, j + 1, k + 1], &lhs, &rhs, &mut witnesses);
            }
        }
    }
    AxiomReport::from_witnesses("hom-leibniz", witnesses)
}

/// Checks the three clauses of the Hom-Leibniz-Poisson definition for a
/// `(dot, bracket, α)` triple:
/// i) the dot is Hom-associative, ii) the bracket is Hom-Leibniz,
/// iii) `[x·y, α(z)] = α(x)·[y,z] + [x,z]·α(y)`.
pub fn check_hom_leibniz_poisson(
    dot: &ProductTensor,
    bracket: &ProductTensor,
    alpha: &TwistMap,
) -> Vec<AxiomReport> {
    assert_eq!(dot.dim(), bracket.dim());
    assert_eq!(dot.dim(), alpha.dim());
    let n = dot.dim();

    let mut item_i = check_hom_associative(dot, alpha);
    item_i.identity = "hlp-i".to_string();
    let mut item_ii = check_hom_leibniz(bracket, alpha);
    item_ii.identity = "hlp-ii".to_string();

    let mut witnesses = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = eval2(bracket, dot.basis_product(i, j), &alpha.basis_image(k));
                let t1 = eval2(dot, &alpha.basis_image(i), bracket.basis_product(j, k));
                let t2 = eval2(dot, bracket.basis_product(i, k), &alpha.basis_image(j));
                let rhs: Vector = t1.iter().zip(&t2).map(|(u, v)| u + v).collect();
                diff_witnesses(&[i + 1, j + 1, k + 1], &lhs, &rhs, &mut witnesses);
            }
        }
    }
    let item_iii = AxiomReport::from_witnesses("hlp-iii", witnesses);

    vec![item_i, item_ii, item_iii]
}

/// True when every report in the slice passed.
pub fn all_passed(reports: &[AxiomReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

/// Human-readable one-line rendering of a report.
pub fn render_report_line(r: &AxiomReport) -> String {
    if r.passed {
        format!("{:12} PASS", r.identity)
    } else {
        let w = &r.witnesses[0];
        format!(
            "{:12} FAIL ({} witnesses; first at {:?} component {}: {} != {})",
            r.identity,
            r.witnesses.len(),
            w.indices,
            w.component,
            w.lhs,
            w.rhs
        )
    }
}
