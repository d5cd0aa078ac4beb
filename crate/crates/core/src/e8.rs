//! The 240-vector construction: H4 plus its tau-scaled copy, read as the
//! E8 root system under the reduced inner product.
//!
//! Even elements of the H3 pinor group map to the 120 H4 vectors; odd
//! elements, multiplied by tau times the pseudoscalar, land on the
//! tau-scaled copy. Inner products are then reduced to their rational
//! parts, `(a + b tau) -> a`. Under that bilinear form the 240 vectors all
//! have norm 1, close under reflection, and carry the E8 Cartan matrix on
//! eight designated simple roots; expanding each golden coordinate into its
//! rational pair embeds the whole set isometrically in 8D rational space.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::clifford::{Multivector, Parity, Versor};
use crate::golden::GoldenNum;
use crate::induce::spinor_to_vec4;
use crate::rootsys::{CartanMatrix, GoldenVec};
use crate::versor::{contains_inversion, VersorGroup};
use crate::{Error, Result};

/// The 240 reduced-unit vectors with their designated simple roots
/// alpha1..alpha8 (alpha5..alpha8 are tau times alpha1..alpha4).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedRootSet {
    roots: BTreeSet<GoldenVec>,
    simple: Vec<GoldenVec>,
}

impl ReducedRootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, v: &GoldenVec) -> bool {
        self.roots.contains(v)
    }

    /// Roots in canonical (lexicographic) order.
    pub fn iter(&self) -> impl Iterator<Item = &GoldenVec> {
        self.roots.iter()
    }

    pub fn roots(&self) -> &BTreeSet<GoldenVec> {
        &self.roots
    }

    /// The designated simple roots alpha1..alpha8, in order.
    pub fn simple_roots(&self) -> &[GoldenVec] {
        &self.simple
    }
}

fn g(an: i64, ad: i64, bn: i64, bd: i64) -> GoldenNum {
    GoldenNum::from_parts(an, ad, bn, bd)
}

/// The four designated H4 simple roots, in this module's coordinate order
/// (scalar, e2e3, e3e1, e1e2): a 3-3-5 bond path. The catalogued listing
/// writes the same roots with the last two coordinates swapped.
pub fn h4_simple_roots() -> [GoldenVec; 4] {
    [
        // (-sigma, -tau, -1, 0) / 2
        GoldenVec::new(vec![g(-1, 2, 1, 2), g(0, 1, -1, 2), g(-1, 2, 0, 1), g(0, 1, 0, 1)]),
        // (0, -sigma, 1, -tau) / 2
        GoldenVec::new(vec![g(0, 1, 0, 1), g(-1, 2, 1, 2), g(1, 2, 0, 1), g(0, 1, -1, 2)]),
        // (0, 1, -tau, -sigma) / 2
        GoldenVec::new(vec![g(0, 1, 0, 1), g(1, 2, 0, 1), g(0, 1, -1, 2), g(-1, 2, 1, 2)]),
        // (0, -1, tau, -sigma) / 2
        GoldenVec::new(vec![g(0, 1, 0, 1), g(-1, 2, 0, 1), g(0, 1, 1, 2), g(-1, 2, 1, 2)]),
    ]
}

/// The reduced inner product: the rational part of the golden dot product.
pub fn reduced_ip(u: &GoldenVec, v: &GoldenVec) -> BigRational {
    u.dot(v).reduced()
}

/// Reflection with respect to the reduced inner product:
/// `v - 2 (v,alpha)/(alpha,alpha) alpha` with reduced-rational coefficients.
pub fn reduced_reflect(alpha: &GoldenVec, v: &GoldenVec) -> Result<GoldenVec> {
    let denom = reduced_ip(alpha, alpha);
    if denom.is_zero() {
        return Err(Error::ZeroReducedNorm);
    }
    let coeff = BigRational::from_integer(BigInt::from(2)) * reduced_ip(v, alpha) / denom;
    Ok(v.sub(&alpha.scale(&GoldenNum::new(coeff, BigRational::zero()))))
}

/// Assembles the 240-vector set from the order-240 H3 pinor group: even
/// elements map through their spinor coordinates, odd elements are first
/// multiplied by tau times the pseudoscalar. Validates the count, the unit
/// reduced norms, and membership of the designated simple roots.
pub fn build_e8(pin: &VersorGroup) -> Result<ReducedRootSet> {
    if pin.order() != 240 {
        return Err(Error::NotPinH3(format!(
            "expected a group of order 240, got {}",
            pin.order()
        )));
    }
    if !contains_inversion(pin) {
        return Err(Error::NotPinH3(
            "the group does not contain the pseudoscalar inversion".into(),
        ));
    }
    let tau_i = Multivector::pseudoscalar().scale_golden(&GoldenNum::tau());
    let mut roots = BTreeSet::new();
    for p in pin.iter() {
        let spinor = match p.parity() {
            Parity::Even => p.clone(),
            Parity::Odd => Versor::try_new(&tau_i * p.value())?,
        };
        roots.insert(spinor_to_vec4(&spinor)?);
    }
    if roots.len() != 240 {
        return Err(Error::Construction(format!(
            "expected 240 distinct vectors, got {}",
            roots.len()
        )));
    }
    for r in &roots {
        if !reduced_ip(r, r).is_one() {
            return Err(Error::Construction(format!(
                "member {} does not have reduced norm 1",
                r
            )));
        }
    }
    let h4 = h4_simple_roots();
    let mut simple: Vec<GoldenVec> = h4.to_vec();
    let tau = GoldenNum::tau();
    for a in &h4 {
        simple.push(a.scale(&tau));
    }
    for a in &simple {
        if !roots.contains(a) {
            return Err(Error::Construction(format!(
                "designated simple root {} is not in the set",
                a
            )));
        }
    }
    Ok(ReducedRootSet { roots, simple })
}

/// The Cartan matrix `A_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)`
/// over the reduced inner product; rational entries.
pub fn cartan_e8(rs: &ReducedRootSet) -> Result<CartanMatrix> {
    let two = BigRational::from_integer(BigInt::from(2));
    let mut entries = Vec::with_capacity(rs.simple.len());
    for a_i in &rs.simple {
        let mut row = Vec::with_capacity(rs.simple.len());
        for a_j in &rs.simple {
            let denom = reduced_ip(a_j, a_j);
            if denom.is_zero() {
                return Err(Error::ZeroReducedNorm);
            }
            let value = &two * reduced_ip(a_i, a_j) / denom;
            row.push(GoldenNum::new(value, BigRational::zero()));
        }
        entries.push(row);
    }
    CartanMatrix::from_entries(entries)
}

/// Expands golden coordinates into rational pairs,
/// `(a1 + b1 tau, ...) -> (a1, b1, a2, b2, ...)`; the reduced inner product
/// of two golden vectors equals the plain dot product of their expansions.
pub fn expand_8d(v: &GoldenVec) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(2 * v.dim());
    for c in v.coords() {
        out.push(c.rational_part().clone());
        out.push(c.tau_part().clone());
    }
    out
}

/// The order of the product of the eight reduced simple reflections as a
/// permutation of the 240-vector set (the lcm of its cycle lengths).
pub fn coxeter_number(rs: &ReducedRootSet) -> Result<usize> {
    let roots: Vec<&GoldenVec> = rs.roots.iter().collect();
    let index: BTreeMap<&GoldenVec, usize> =
        roots.iter().enumerate().map(|(i, r)| (*r, i)).collect();
    let mut perm = Vec::with_capacity(roots.len());
    for r in &roots {
        let mut v = (*r).clone();
        for alpha in &rs.simple {
            v = reduced_reflect(alpha, &v)?;
        }
        match index.get(&v) {
            Some(&i) => perm.push(i),
            None => return Err(Error::EscapedSet),
        }
    }
    let mut seen = vec![false; perm.len()];
    let mut order: usize = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0usize;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
            len += 1;
        }
        order = order.lcm(&len);
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{close_default, dynkin, seed, SeedName};
    use crate::versor::generate_pin_default;
    use proptest::prelude::*;
    use std::sync::OnceLock;

    fn pin_h3() -> &'static VersorGroup {
        static PIN: OnceLock<VersorGroup> = OnceLock::new();
        PIN.get_or_init(|| {
            generate_pin_default(&close_default(&seed(SeedName::H3)).unwrap()).unwrap()
        })
    }

    fn e8() -> &'static ReducedRootSet {
        static SET: OnceLock<ReducedRootSet> = OnceLock::new();
        SET.get_or_init(|| build_e8(pin_h3()).unwrap())
    }

    fn ratio(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn the_set_has_240_reduced_unit_vectors() {
        let rs = e8();
        assert_eq!(rs.len(), 240);
        for r in rs.iter() {
            assert!(reduced_ip(r, r).is_one());
        }
    }

    #[test]
    fn odd_image_is_the_tau_multiple_of_the_even_image() {
        let tau = GoldenNum::tau();
        let mut even_image = BTreeSet::new();
        let mut odd_image = BTreeSet::new();
        let tau_i = Multivector::pseudoscalar().scale_golden(&tau);
        for p in pin_h3().iter() {
            match p.parity() {
                Parity::Even => {
                    even_image.insert(spinor_to_vec4(p).unwrap());
                }
                Parity::Odd => {
                    let spinor = Versor::try_new(&tau_i * p.value()).unwrap();
                    odd_image.insert(spinor_to_vec4(&spinor).unwrap());
                }
            }
        }
        assert_eq!(even_image.len(), 120);
        assert_eq!(odd_image.len(), 120);
        let scaled: BTreeSet<GoldenVec> = even_image.iter().map(|v| v.scale(&tau)).collect();
        assert_eq!(odd_image, scaled);
        assert!(even_image.is_disjoint(&odd_image));
        let union: BTreeSet<GoldenVec> = even_image.union(&odd_image).cloned().collect();
        assert_eq!(&union, e8().roots());
    }

    #[test]
    fn designated_simple_roots_are_members_and_tau_related() {
        let rs = e8();
        let simple = rs.simple_roots();
        assert_eq!(simple.len(), 8);
        for a in simple {
            assert!(rs.contains(a));
        }
        let tau = GoldenNum::tau();
        for i in 0..4 {
            assert_eq!(simple[i + 4], simple[i].scale(&tau));
        }
    }

    #[test]
    fn alpha5_matches_the_catalogued_coordinates_up_to_the_axis_swap() {
        // In the listing's coordinate order alpha5 = tau alpha1 reads
        // (1, -tau-1, 0, -tau)/2; this module's basis swaps the last two
        // coordinates.
        let alpha5 = &e8().simple_roots()[4];
        let c = alpha5.coords();
        let swapped = GoldenVec::new(vec![
            c[0].clone(),
            c[1].clone(),
            c[3].clone(),
            c[2].clone(),
        ]);
        assert_eq!(
            swapped,
            GoldenVec::new(vec![g(1, 2, 0, 1), g(-1, 2, -1, 2), g(0, 1, 0, 1), g(0, 1, -1, 2)])
        );
    }

    #[test]
    fn worked_reduced_inner_products() {
        let s = e8().simple_roots();
        assert_eq!(reduced_ip(&s[0], &s[1]), ratio(-1, 2));
        assert_eq!(reduced_ip(&s[2], &s[3]), ratio(0, 1));
        assert_eq!(reduced_ip(&s[6], &s[7]), ratio(-1, 2));
        assert_eq!(reduced_ip(&s[6], &s[3]), ratio(-1, 2));
    }

    #[test]
    fn cartan_matrix_is_the_e8_matrix() {
        let expected: [[i64; 8]; 8] = [
            [2, -1, 0, 0, 0, 0, 0, 0],
            [-1, 2, -1, 0, 0, 0, 0, 0],
            [0, -1, 2, 0, 0, 0, 0, -1],
            [0, 0, 0, 2, 0, 0, -1, 0],
            [0, 0, 0, 0, 2, -1, 0, 0],
            [0, 0, 0, 0, -1, 2, -1, 0],
            [0, 0, 0, -1, 0, -1, 2, -1],
            [0, 0, -1, 0, 0, 0, -1, 2],
        ];
        let c = cartan_e8(e8()).unwrap();
        assert_eq!(c.size(), 8);
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(
                    c.entry(i, j),
                    &GoldenNum::from_int(expected[i][j]),
                    "entry ({}, {})",
                    i,
                    j
                );
            }
        }
    }

    #[test]
    fn dynkin_graph_is_the_simply_laced_e8_tree() {
        let graph = dynkin(&cartan_e8(e8()).unwrap()).unwrap();
        assert_eq!(graph.nodes(), 8);
        assert_eq!(graph.edges().len(), 7);
        for (_, _, m) in graph.edges() {
            assert_eq!(*m, 3);
        }
        assert!(graph.is_tree());
        assert_eq!(graph.degree_sequence(), vec![1, 1, 1, 2, 2, 2, 2, 3]);
    }

    #[test]
    fn reduced_reflections_close_over_the_whole_set() {
        let rs = e8();
        for mirror in rs.iter() {
            for v in rs.iter() {
                let image = reduced_reflect(mirror, v).unwrap();
                assert!(rs.contains(&image));
            }
        }
    }

    #[test]
    fn reduced_reflect_examples_and_errors() {
        let s = e8().simple_roots();
        assert_eq!(reduced_reflect(&s[0], &s[0]).unwrap(), -&s[0]);
        // Reduced-orthogonal pair: reflection fixes the partner.
        assert_eq!(reduced_reflect(&s[2], &s[3]).unwrap(), s[3].clone());
        let zero = GoldenVec::new(vec![GoldenNum::zero(); 4]);
        assert!(matches!(
            reduced_reflect(&zero, &s[0]),
            Err(Error::ZeroReducedNorm)
        ));
    }

    #[test]
    fn expansion_is_an_isometry_onto_rational_8_space() {
        let example = GoldenVec::new(vec![
            GoldenNum::zero(),
            GoldenNum::zero(),
            GoldenNum::zero(),
            GoldenNum::tau(),
        ]);
        assert_eq!(
            expand_8d(&example),
            vec![
                ratio(0, 1),
                ratio(0, 1),
                ratio(0, 1),
                ratio(0, 1),
                ratio(0, 1),
                ratio(0, 1),
                ratio(0, 1),
                ratio(1, 1),
            ]
        );

        let rs = e8();
        let expanded: Vec<Vec<BigRational>> = rs.iter().map(expand_8d).collect();
        let roots: Vec<&GoldenVec> = rs.iter().collect();
        for i in 0..roots.len() {
            for j in 0..roots.len() {
                let dot: BigRational = expanded[i]
                    .iter()
                    .zip(&expanded[j])
                    .map(|(x, y)| x * y)
                    .sum();
                assert_eq!(dot, reduced_ip(roots[i], roots[j]));
            }
        }
    }

    #[test]
    fn every_root_sees_the_e8_neighbor_profile() {
        let rs = e8();
        let roots: Vec<&GoldenVec> = rs.iter().collect();
        for r in &roots {
            let mut tally: BTreeMap<BigRational, usize> = BTreeMap::new();
            for s in &roots {
                *tally.entry(reduced_ip(r, s)).or_insert(0) += 1;
            }
            let expected = BTreeMap::from([
                (ratio(1, 1), 1),
                (ratio(-1, 1), 1),
                (ratio(1, 2), 56),
                (ratio(-1, 2), 56),
                (ratio(0, 1), 126),
            ]);
            assert_eq!(tally, expected);
        }
    }

    #[test]
    fn coxeter_number_is_thirty() {
        let rs = e8();
        let h = coxeter_number(rs).unwrap();
        assert_eq!(h, 30);
        assert_eq!(h, rs.len() / rs.simple_roots().len());
        // Independent order check: iterate the permutation explicitly.
        let roots: Vec<&GoldenVec> = rs.iter().collect();
        let index: BTreeMap<&GoldenVec, usize> =
            roots.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        let mut perm = Vec::with_capacity(roots.len());
        for r in &roots {
            let mut v = (*r).clone();
            for alpha in rs.simple_roots() {
                v = reduced_reflect(alpha, &v).unwrap();
            }
            perm.push(index[&v]);
        }
        let mut power: Vec<usize> = (0..perm.len()).collect();
        let mut order = 0;
        for k in 1..=40 {
            power = power.iter().map(|&i| perm[i]).collect();
            if power.iter().enumerate().all(|(i, &p)| i == p) {
                order = k;
                break;
            }
        }
        assert_eq!(order, 30);
    }

    #[test]
    fn build_rejects_wrong_groups() {
        let a3_pin =
            generate_pin_default(&close_default(&seed(SeedName::A3)).unwrap()).unwrap();
        assert!(matches!(build_e8(&a3_pin), Err(Error::NotPinH3(_))));

        // Same order, but the pseudoscalar pair is replaced by two foreign
        // versors: the inversion check must fire.
        let i = Versor::try_new(Multivector::pseudoscalar()).unwrap();
        let neg_i = Versor::try_new(-Multivector::pseudoscalar()).unwrap();
        let long = Versor::from_vector(&[
            GoldenNum::one(),
            GoldenNum::from_int(-1),
            GoldenNum::zero(),
        ])
        .unwrap();
        let neg_long = Versor::try_new(-long.value().clone()).unwrap();
        let mut elements = pin_h3().elements().clone();
        assert!(elements.remove(&i));
        assert!(elements.remove(&neg_i));
        elements.insert(long);
        elements.insert(neg_long);
        let doctored = VersorGroup::from_elements(elements, Vec::new());
        assert_eq!(doctored.order(), 240);
        assert!(matches!(build_e8(&doctored), Err(Error::NotPinH3(_))));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn reduced_ip_is_symmetric_and_matches_the_expansion(
            a in proptest::array::uniform4(-3i64..4),
            b in proptest::array::uniform4(-3i64..4),
            c in proptest::array::uniform4(-3i64..4),
            d in proptest::array::uniform4(-3i64..4),
        ) {
            let u = GoldenVec::new(
                (0..4).map(|i| GoldenNum::from_int(a[i]) + GoldenNum::tau() * GoldenNum::from_int(b[i]))
                    .collect(),
            );
            let v = GoldenVec::new(
                (0..4).map(|i| GoldenNum::from_int(c[i]) + GoldenNum::tau() * GoldenNum::from_int(d[i]))
                    .collect(),
            );
            prop_assert_eq!(reduced_ip(&u, &v), reduced_ip(&v, &u));
            let dot: BigRational = expand_8d(&u)
                .iter()
                .zip(&expand_8d(&v))
                .map(|(x, y)| x * y)
                .sum();
            prop_assert_eq!(reduced_ip(&u, &v), dot);
        }
    }
}
