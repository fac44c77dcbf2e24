//! The derived structures a Hom-associative trialgebra carries: product
//! sums, the augmented right product, the opposite algebra, and the two
//! product/bracket pairs, each packaged with the axiom checks the underlying
//! propositions assert.
//!
//! Constructions return their axiom reports instead of asserting success:
//! the propositions presuppose an input satisfying the defining axioms, and
//! catalog entries are transcribed verbatim, typos included, so callers
//! decide what failure means.

use crate::algebra::{HomTrialgebra, OpSelector, ProductTensor, TwistMap};
use crate::axioms::{
    check_hom_associative, check_hom_leibniz_poisson, check_triassociativity, AxiomReport, Witness,
};

/// A derived trialgebra together with the nine-axiom report for it.
#[derive(Debug, Clone)]
pub struct DerivedTrialgebra {
    pub algebra: HomTrialgebra,
    pub reports: Vec<AxiomReport>,
}

/// A derived single product together with the twist it inherits.
#[derive(Debug, Clone)]
pub struct DerivedProduct {
    pub product: ProductTensor,
    pub alpha: TwistMap,
}

impl DerivedProduct {
    pub fn check(&self) -> AxiomReport {
        check_hom_associative(&self.product, &self.alpha)
    }
}

/// A derived (dot, bracket) pair with the inherited twist.
#[derive(Debug, Clone)]
pub struct DerivedPair {
    pub dot: ProductTensor,
    pub bracket: ProductTensor,
    pub alpha: TwistMap,
}

impl DerivedPair {
    pub fn check(&self) -> Vec<AxiomReport> {
        check_hom_leibniz_poisson(&self.dot, &self.bracket, &self.alpha)
    }
}

fn derived(a: &HomTrialgebra, label_suffix: &str, algebra: HomTrialgebra) -> DerivedTrialgebra {
    let algebra = match a.label() {
        Some(l) => algebra.with_label(format!("{l}:{label_suffix}")),
        None => algebra,
    };
    let reports = check_triassociativity(&algebra);
    DerivedTrialgebra { algebra, reports }
}

/// New trialgebra with products `(⊣, ⊥, ⊢+⊥)` placed positionally into the
/// (left, right, middle) slots, following the stated tuple order.
pub fn sum_right_middle(a: &HomTrialgebra) -> DerivedTrialgebra {
    let star = a
        .tensor(OpSelector::Right)
        .add(a.tensor(OpSelector::Middle));
    let algebra = HomTrialgebra::new(
        a.tensor(OpSelector::Left).clone(),
        a.tensor(OpSelector::Middle).clone(),
        star,
        a.alpha().clone(),
        None,
    )
    .expect("dims agree");
    derived(a, "sum-right-middle", algebra)
}

/// The single product `x∗y = x⊣y + x⊢y + x⊥y` with the inherited twist.
pub fn total_sum_product(a: &HomTrialgebra) -> DerivedProduct {
    let star = a
        .tensor(OpSelector::Left)
        .add(a.tensor(OpSelector::Right))
        .add(a.tensor(OpSelector::Middle));
    DerivedProduct {
        product: star,
        alpha: a.alpha().clone(),
    }
}

/// The single product `x∗y = x⊣y + x⊢y - x⊥y` with the inherited twist.
pub fn signed_sum_product(a: &HomTrialgebra) -> DerivedProduct {
    let star = a
        .tensor(OpSelector::Left)
        .add(a.tensor(OpSelector::Right))
        .sub(a.tensor(OpSelector::Middle));
    DerivedProduct {
        product: star,
        alpha: a.alpha().clone(),
    }
}

/// Replaces the right product by `x⊢'y = x⊢y + x⊣y`, keeping the middle
/// product unchanged as the minimal completion of the stated tuple.
pub fn augment_right(a: &HomTrialgebra) -> DerivedTrialgebra {
    let aug = a.tensor(OpSelector::Right).add(a.tensor(OpSelector::Left));
    let algebra = a.with_tensor(OpSelector::Right, aug);
    derived(a, "augment-right", algebra)
}

/// The opposite trialgebra: `x ⊣' y = y ⊢ x`, `x ⊢' y = y ⊣ x`,
/// `x ⊥' y = y ⊥ x`, twist unchanged.
pub fn opposite(a: &HomTrialgebra) -> DerivedTrialgebra {
    let algebra = HomTrialgebra::new(
        a.tensor(OpSelector::Right).swap_args(),
        a.tensor(OpSelector::Left).swap_args(),
        a.tensor(OpSelector::Middle).swap_args(),
        a.alpha().clone(),
        None,
    )
    .expect("dims agree");
    derived(a, "opposite", algebra)
}

/// The pair `x∗y = x⊣y - y⊢x`, `[x,y] = x⊥y - y⊥x`.
pub fn commutator_pair(a: &HomTrialgebra) -> DerivedPair {
    let star = a
        .tensor(OpSelector::Left)
        .sub(&a.tensor(OpSelector::Right).swap_args());
    let phi = a.tensor(OpSelector::Middle);
    let bracket = phi.sub(&phi.swap_args());
    DerivedPair {
        dot: star,
        bracket,
        alpha: a.alpha().clone(),
    }
}

/// Checks the displayed relation `[x,y] ∗ α(z) = [x∗z, α(y)] + [α(x), y∗z]`
/// on all basis triples for a commutator pair.
pub fn check_commutator_identity(pair: &DerivedPair) -> AxiomReport {
    let n = pair.dot.dim();
    let star = &pair.dot;
    let bracket = &pair.bracket;
    let mut witnesses = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = star
                    .evaluate(bracket.basis_product(i, j), &pair.alpha.basis_image(k))
                    .expect("dims");
                let t1 = bracket
                    .evaluate(star.basis_product(i, k), &pair.alpha.basis_image(j))
                    .expect("dims");
                let t2 = bracket
                    .evaluate(&pair.alpha.basis_image(i), star.basis_product(j, k))
                    .expect("dims");
                for r in 0..n {
                    let rhs = &t1[r] + &t2[r];
                    if lhs[r] != rhs {
                        witnesses.push(Witness {
                            indices: vec![i + 1, j + 1, k + 1],
                            component: r + 1,
                            lhs: lhs[r].clone(),
                            rhs,
                        });
                    }
                }
            }
        }
    }
    AxiomReport {
        identity: "commutator-identity".to_string(),
        passed: witnesses.is_empty(),
        witnesses,
    }
}

/// The pair `x∗y = x⊥y`, `[x,y] = x⊣y - x⊢y`.
pub fn leibniz_poisson_pair(a: &HomTrialgebra) -> DerivedPair {
    DerivedPair {
        dot: a.tensor(OpSelector::Middle).clone(),
        bracket: a.tensor(OpSelector::Left).sub(a.tensor(OpSelector::Right)),
        alpha: a.alpha().clone(),
    }
}

/// The pair `x∗y = x⊣y + x⊢y - x⊥y`, `[x,y] = x∗y - y∗x`.
pub fn leibniz_poisson_pair_corollary(a: &HomTrialgebra) -> DerivedPair {
    let dot = a
        .tensor(OpSelector::Left)
        .add(a.tensor(OpSelector::Right))
        .sub(a.tensor(OpSelector::Middle));
    let bracket = dot.sub(&dot.swap_args());
    DerivedPair {
        dot,
        bracket,
        alpha: a.alpha().clone(),
    }
}

/// Names accepted by the construct entry point, as exposed on the CLI.
pub const CONSTRUCTION_NAMES: [&str; 8] = [
    "sum-right-middle",
    "total-sum",
    "signed-sum",
    "augment-right",
    "opposite",
    "commutator-pair",
    "lp-pair",
    "lp-pair-corollary",
];

/// Runs the named construction and renders the result as a trialgebra for
/// serialization. Single products land in the left slot; pairs put the dot
/// in the left slot and the bracket in the right slot; unused slots are
/// zero. The provenance string records that layout.
pub fn construct_by_name(name: &str, a: &HomTrialgebra) -> Option<(HomTrialgebra, String)> {
    let n = a.dim();
    let src = a.label().unwrap_or("<input>").to_string();
    let from_product = |p: DerivedProduct, name: &str| {
        let algebra = HomTrialgebra::new(
            p.product,
            ProductTensor::zero(n),
            ProductTensor::zero(n),
            p.alpha,
            None,
        )
        .expect("dims agree");
        let provenance = format!("{name} of {src}; star product in left slot");
        (algebra, provenance)
    };
    let from_pair = |p: DerivedPair, name: &str| {
        let algebra = HomTrialgebra::new(
            p.dot,
            p.bracket,
            ProductTensor::zero(n),
            p.alpha,
            None,
        )
        .expect("dims agree");
        let provenance = format!("{name} of {src}; dot in left slot, bracket in right slot");
        (algebra, provenance)
    };
    Some(match name {
        "sum-right-middle" => {
            let d = sum_right_middle(a);
            (d.algebra, format!("sum-right-middle of {src}"))
        }
        "total-sum" => from_product(total_sum_product(a), "total-sum"),
        "signed-sum" => from_product(signed_sum_product(a), "signed-sum"),
        "augment-right" => {
            let d = augment_right(a);
            (d.algebra, format!("augment-right of {src}"))
        }
        "opposite" => {
            let d = opposite(a);
            (d.algebra, format!("opposite of {src}"))
        }
        "commutator-pair" => from_pair(commutator_pair(a), "commutator-pair"),
        "lp-pair" => from_pair(leibniz_poisson_pair(a), "lp-pair"),
        "lp-pair-corollary" => from_pair(leibniz_poisson_pair_corollary(a), "lp-pair-corollary"),
        _ => return None,
    })
}

/// Scales every product tensor of the algebra by `lambda`, used by the
/// linearity property tests.
pub fn rescale_products(a: &HomTrialgebra, lambda: &crate::linalg::Scalar) -> HomTrialgebra {
    HomTrialgebra::new(
        a.tensor(OpSelector::Left).scale(lambda),
        a.tensor(OpSelector::Right).scale(lambda),
        a.tensor(OpSelector::Middle).scale(lambda),
        a.alpha().clone(),
        None,
    )
    .expect("dims agree")
}
