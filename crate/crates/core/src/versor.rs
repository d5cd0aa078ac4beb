//! Finite pinor and spinor groups generated by root vectors.
//!
//! Root vectors of a 3D root system, multiplied freely under the geometric
//! product and rescaled to a canonical norm, close into a finite group (240
//! elements for H3, 48 for A3, 96 for B3). This module builds that closure,
//! filters the even (spinor) subgroup, and computes order, conjugacy class
//! sizes, central-inversion membership, and the count of distinct
//! orthogonal actions.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::clifford::{Multivector, Parity, Versor};
use crate::rootsys::RootSystem;
use crate::{Error, Result, DEFAULT_CAP};

fn perfect_square_root(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Rescales a versor by the unique positive rational that puts its norm
/// squared into {1, 2}; already-canonical versors pass through unchanged.
///
/// Roots with rational non-square norms (or irrational golden norms) admit
/// no such scale and yield [`Error::NonNormalizable`]; every versor arising
/// from the A3/B3/H3 catalog normalizes.
pub fn canonicalize(a: &Versor) -> Result<Versor> {
    let ns = a.norm_sq();
    if !ns.is_rational() {
        return Err(Error::NonNormalizable(format!(
            "norm squared {} is not rational",
            ns
        )));
    }
    let r = ns.rational_part();
    for target in 1..=2 {
        let q_sq = BigRational::from_integer(BigInt::from(target)) / r;
        if let (Some(num_root), Some(den_root)) = (
            perfect_square_root(q_sq.numer()),
            perfect_square_root(q_sq.denom()),
        ) {
            let q = BigRational::new(num_root, den_root);
            if q.is_one() {
                return Ok(a.clone());
            }
            return Versor::try_new(a.value().scale(&q));
        }
    }
    Err(Error::NonNormalizable(format!(
        "no rational square carries norm squared {} into {{1, 2}}",
        r
    )))
}

/// The group inverse `reverse(A) / norm²(A)`, canonicalized. For canonical
/// versors this coincides with plain reversal.
pub fn inverse_of(a: &Versor) -> Result<Versor> {
    let scale = a.norm_sq().inverse()?;
    canonicalize(&Versor::try_new(a.reverse().value().scale_golden(&scale))?)
}

/// A finite multiplicative group of canonical versors, tagged with the
/// generating root vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VersorGroup {
    elements: BTreeSet<Versor>,
    generators: Vec<Versor>,
}

impl VersorGroup {
    /// Wraps an element set directly; trusts the caller that it is closed.
    pub fn from_elements(elements: BTreeSet<Versor>, generators: Vec<Versor>) -> Self {
        VersorGroup {
            elements,
            generators,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &BTreeSet<Versor> {
        &self.elements
    }

    /// The canonicalized root vectors the closure started from.
    pub fn generators(&self) -> &[Versor] {
        &self.generators
    }

    pub fn contains(&self, v: &Versor) -> bool {
        self.elements.contains(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Versor> {
        self.elements.iter()
    }
}

/// Closes the root vectors of a 3D root system under the canonicalized
/// geometric product into the finite pinor group.
///
/// Breadth-first: each pass multiplies every generator onto the previous
/// pass's discoveries, so all products of root vectors are reached. Aborts
/// with [`Error::CapExceeded`] if the set outgrows `cap`.
pub fn generate_pin(roots: &RootSystem, cap: usize) -> Result<VersorGroup> {
    if roots.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: roots.dim(),
        });
    }
    let mut generators = Vec::with_capacity(roots.len());
    for r in roots.iter() {
        let c = r.coords();
        let vec = [c[0].clone(), c[1].clone(), c[2].clone()];
        generators.push(canonicalize(&Versor::from_vector(&vec)?)?);
    }
    let mut elements: BTreeSet<Versor> = generators.iter().cloned().collect();
    let mut frontier: Vec<Versor> = elements.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &generators {
            for f in &frontier {
                let prod = canonicalize(&Versor::try_new(g.value() * f.value())?)?;
                if !elements.contains(&prod) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    elements.insert(prod.clone());
                    next.push(prod);
                }
            }
        }
        frontier = next;
    }
    Ok(VersorGroup {
        elements,
        generators,
    })
}

/// Closes with the default cap of 10,000 elements.
pub fn generate_pin_default(roots: &RootSystem) -> Result<VersorGroup> {
    generate_pin(roots, DEFAULT_CAP)
}

/// The even-parity elements: the spinor (rotor) subgroup, half the pinor
/// group. Generators are carried over as provenance.
pub fn even_subgroup(g: &VersorGroup) -> VersorGroup {
    let elements = g
        .elements
        .iter()
        .filter(|v| v.parity() == Parity::Even)
        .cloned()
        .collect();
    VersorGroup {
        elements,
        generators: g.generators.clone(),
    }
}

/// Sorted conjugacy class sizes of the group (orbits of `x` under
/// `x -> g⁻¹ x g` over all `g`), summing to the group order.
pub fn conjugacy_class_sizes(g: &VersorGroup) -> Result<Vec<usize>> {
    let elems: Vec<&Versor> = g.elements.iter().collect();
    let mut inverses = Vec::with_capacity(elems.len());
    for e in &elems {
        inverses.push(inverse_of(e)?);
    }
    let mut remaining: BTreeSet<&Versor> = g.elements.iter().collect();
    let mut sizes = Vec::new();
    while let Some(x) = remaining.iter().next().copied() {
        let mut class: BTreeSet<Versor> = BTreeSet::new();
        for (e, e_inv) in elems.iter().zip(&inverses) {
            let conj =
                canonicalize(&Versor::try_new(e_inv.value() * &(x.value() * e.value()))?)?;
            class.insert(conj);
        }
        for c in &class {
            remaining.remove(c);
        }
        sizes.push(class.len());
    }
    sizes.sort_unstable();
    Ok(sizes)
}

/// True when the group contains the pseudoscalar (either sign), whose
/// sandwich action is the central inversion `v -> -v`.
pub fn contains_inversion(g: &VersorGroup) -> bool {
    let i = Versor::try_new(Multivector::pseudoscalar()).expect("pseudoscalar is a versor");
    let neg_i = Versor::try_new(-Multivector::pseudoscalar()).expect("pseudoscalar is a versor");
    g.contains(&i) || g.contains(&neg_i)
}

/// Counts the distinct orthogonal transformations the group realizes via
/// the sandwich action on the three basis vectors; the double cover makes
/// this half the order when -1 is present and actions pair up.
pub fn distinct_action_count(g: &VersorGroup) -> Result<usize> {
    let basis = [
        Multivector::basis_blade(1),
        Multivector::basis_blade(2),
        Multivector::basis_blade(3),
    ];
    let mut actions: BTreeSet<[Multivector; 3]> = BTreeSet::new();
    for v in g.iter() {
        actions.insert([
            v.apply(&basis[0])?,
            v.apply(&basis[1])?,
            v.apply(&basis[2])?,
        ]);
    }
    Ok(actions.len())
}
