//! 3D-to-4D induction: a spinor group read as a 4D root system.
//!
//! An even versor `R = a0 + a1 e2e3 + a2 e3e1 + a3 e1e2` carries four
//! coefficients, and its versor norm is their Euclidean square sum, so the
//! spinor group of a 3D root system sits naturally in 4D space. This module
//! maps spinor groups to 4D vector sets (H3 to the 120 roots of H4, A3 to
//! D4, B3 to F4), verifies the root-system axioms on the image, and checks
//! that left and right group multiplication permute the induced set.

use std::collections::BTreeSet;

use crate::clifford::{Parity, Versor};
use crate::golden::GoldenNum;
use crate::rootsys::{self, GoldenVec, RootSystem};
use crate::versor::{canonicalize, even_subgroup, generate_pin, VersorGroup};
use crate::{Error, Result, DEFAULT_CAP};

/// Reads an even versor's coefficients on (1, e2e3, e3e1, e1e2) as a 4D
/// golden vector; the 4D Euclidean norm equals the versor norm.
pub fn spinor_to_vec4(r: &Versor) -> Result<GoldenVec> {
    if r.parity() != Parity::Even {
        return Err(Error::OddParity);
    }
    let c = r.value().coeffs();
    Ok(GoldenVec::new(vec![
        c[0].clone(),
        c[4].clone(),
        c[5].clone(),
        c[6].clone(),
    ]))
}

/// The spinor inner product `(R1 reverse(R2) + R2 reverse(R1)) / 2`, a
/// scalar that equals the 4D dot product of the spinors' vector images.
pub fn spinor_inner(r1: &Versor, r2: &Versor) -> Result<GoldenNum> {
    if r1.parity() != Parity::Even || r2.parity() != Parity::Even {
        return Err(Error::OddParity);
    }
    let sum = &(r1.value() * r2.reverse().value()) + &(r2.value() * r1.reverse().value());
    debug_assert!(sum.is_scalar());
    Ok(sum.scalar_part() * GoldenNum::from_ratio(1, 2))
}

/// Maps the even subgroup of a pinor group to its 4D image and verifies
/// both root-system axioms on the result.
pub fn induce_from_pin(pin: &VersorGroup) -> Result<RootSystem> {
    let spin = even_subgroup(pin);
    let mut roots = BTreeSet::new();
    for r in spin.iter() {
        roots.insert(spinor_to_vec4(r)?);
    }
    let rs = RootSystem::from_roots(4, roots)?;
    let report = rootsys::verify_axioms(&rs);
    match report.violation {
        Some(v) => Err(Error::AxiomsViolated(v)),
        None => Ok(rs),
    }
}

/// Generates the pinor group of a 3D root system and induces its 4D root
/// system: 120 roots from H3, 24 from A3, 48 from B3.
pub fn induce(roots3d: &RootSystem, cap: usize) -> Result<RootSystem> {
    induce_from_pin(&generate_pin(roots3d, cap)?)
}

/// As [`induce`], with the default closure cap.
pub fn induce_default(roots3d: &RootSystem) -> Result<RootSystem> {
    induce(roots3d, DEFAULT_CAP)
}

/// Tally of how many left and right multiplications permute the induced
/// set; both must equal the group order for the symmetry to hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub total: usize,
    pub left_permutations: usize,
    pub right_permutations: usize,
}

impl SymmetryReport {
    pub fn passed(&self) -> bool {
        self.left_permutations == self.total && self.right_permutations == self.total
    }
}

/// Checks that every element `A` of the spinor group permutes the induced
/// 4D set under both `R -> AR` and `R -> RA` (canonicalized). `rs4` must be
/// the induced image of `spin`.
pub fn check_spinorial_symmetry(spin: &VersorGroup, rs4: &RootSystem) -> Result<SymmetryReport> {
    let mut image: BTreeSet<GoldenVec> = BTreeSet::new();
    for r in spin.iter() {
        image.insert(spinor_to_vec4(r)?);
    }
    if &image != rs4.roots() {
        return Err(Error::Construction(
            "the 4D set is not the image of the given spinor group".into(),
        ));
    }
    let mut left_permutations = 0;
    let mut right_permutations = 0;
    for a in spin.iter() {
        let mut left_image = BTreeSet::new();
        let mut right_image = BTreeSet::new();
        for r in spin.iter() {
            let left = canonicalize(&Versor::try_new(a.value() * r.value())?)?;
            left_image.insert(spinor_to_vec4(&left)?);
            let right = canonicalize(&Versor::try_new(r.value() * a.value())?)?;
            right_image.insert(spinor_to_vec4(&right)?);
        }
        if left_image == image {
            left_permutations += 1;
        }
        if right_image == image {
            right_permutations += 1;
        }
    }
    Ok(SymmetryReport {
        total: spin.order(),
        left_permutations,
        right_permutations,
    })
}
