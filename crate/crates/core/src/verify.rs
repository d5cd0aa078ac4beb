//! The self-verification suite: every structural invariant the library
//! promises, run end to end against a chosen target and reported as a
//! pass/fail table.
//!
//! Targets A3, B3, and H3 run the shared arithmetic property checks plus
//! that catalog entry's full chain (closure, axioms, extraction, pinor
//! group, induction, spinorial symmetry, JSON round-trips). Target E8 runs
//! the H3 chain and then the 240-vector construction checks. All random
//! checks use a fixed seed, so output is identical across runs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::{Multivector, Versor};
use crate::e8::{build_e8, cartan_e8, coxeter_number, expand_8d, reduced_ip, reduced_reflect};
use crate::golden::GoldenNum;
use crate::induce::{check_spinorial_symmetry, induce_from_pin, spinor_inner};
use crate::rootsys::{
    cartan, close_default, dynkin, extract_simple_roots, seed, verify_axioms, CartanMatrix,
    GoldenVec, RootSystem, SeedName,
};
use crate::versor::{
    canonicalize, conjugacy_class_sizes, contains_inversion, distinct_action_count, even_subgroup,
    generate_pin_default, inverse_of, VersorGroup,
};
use crate::{Error, Result};

const SEED: u64 = 0x5eed_c0de;

/// One verification outcome.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// The collected outcomes of a verification run.
#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    /// Renders the fixed-width pass/fail table with a summary line.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let width = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(4)
            .max(4);
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{}  {:<width$}  {}\n",
                status,
                c.name,
                c.detail,
                width = width
            ));
        }
        let failures = self.failures();
        if failures == 0 {
            out.push_str(&format!("all {} checks passed\n", self.checks.len()));
        } else {
            out.push_str(&format!(
                "{} of {} checks FAILED\n",
                failures,
                self.checks.len()
            ));
        }
        out
    }

    fn run(
        &mut self,
        name: &str,
        f: impl FnOnce() -> std::result::Result<String, String>,
    ) {
        let check = match f() {
            Ok(detail) => Check {
                name: name.to_string(),
                passed: true,
                detail,
            },
            Err(detail) => Check {
                name: name.to_string(),
                passed: false,
                detail,
            },
        };
        self.checks.push(check);
    }
}

/// What to verify: one catalog entry's chain, or the full E8 construction.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum VerifyTarget {
    A3,
    B3,
    H3,
    E8,
}

impl FromStr for VerifyTarget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A3" => Ok(VerifyTarget::A3),
            "B3" => Ok(VerifyTarget::B3),
            "H3" => Ok(VerifyTarget::H3),
            "E8" => Ok(VerifyTarget::E8),
            _ => Err(Error::UnknownSeed(s.to_string())),
        }
    }
}

impl fmt::Display for VerifyTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyTarget::A3 => write!(f, "A3"),
            VerifyTarget::B3 => write!(f, "B3"),
            VerifyTarget::H3 => write!(f, "H3"),
            VerifyTarget::E8 => write!(f, "E8"),
        }
    }
}

fn err_str(e: Error) -> String {
    e.to_string()
}

fn expect_eq<T: PartialEq + fmt::Debug>(
    what: &str,
    got: T,
    want: T,
) -> std::result::Result<String, String> {
    if got == want {
        Ok(format!("{} = {:?}", what, got))
    } else {
        Err(format!("{}: expected {:?}, got {:?}", what, want, got))
    }
}

fn rand_golden(rng: &mut ChaCha8Rng) -> GoldenNum {
    GoldenNum::from_parts(
        rng.gen_range(-6..=6),
        rng.gen_range(1..=4),
        rng.gen_range(-6..=6),
        rng.gen_range(1..=4),
    )
}

fn rand_multivector(rng: &mut ChaCha8Rng) -> Multivector {
    let coeffs: [GoldenNum; 8] = std::array::from_fn(|_| {
        GoldenNum::from_parts(rng.gen_range(-3..=3), 1, rng.gen_range(-2..=2), 1)
    });
    Multivector::from_coeffs(coeffs)
}

fn rand_nonzero_vector(rng: &mut ChaCha8Rng) -> [GoldenNum; 3] {
    loop {
        let v: [GoldenNum; 3] = std::array::from_fn(|_| {
            GoldenNum::from_parts(rng.gen_range(-3..=3), 1, rng.gen_range(-2..=2), 1)
        });
        if v.iter().any(|c| !c.is_zero()) {
            return v;
        }
    }
}

fn rand_versor(rng: &mut ChaCha8Rng) -> Versor {
    let factors = rng.gen_range(1..=3);
    let mut value = Multivector::from_vector(&rand_nonzero_vector(rng));
    for _ in 1..factors {
        value = &value * &Multivector::from_vector(&rand_nonzero_vector(rng));
    }
    Versor::try_new(value).expect("products of nonzero vectors are versors")
}

fn vector_dot(u: &Multivector, v: &Multivector) -> GoldenNum {
    let uc = u.vector_coeffs();
    let vc = v.vector_coeffs();
    let mut acc = GoldenNum::zero();
    for (x, y) in uc.iter().zip(vc.iter()) {
        acc = acc + x * y;
    }
    acc
}

fn numeric_checks(report: &mut VerifyReport) {
    report.run("golden.ring_axioms", || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for _ in 0..1000 {
            let (x, y, z) = (
                rand_golden(&mut rng),
                rand_golden(&mut rng),
                rand_golden(&mut rng),
            );
            if (&x + &y) - &y != x
                || &x + &y != &y + &x
                || (&x * &y) * &z != &x * &(&y * &z)
                || &x * &y != &y * &x
                || &x * &(&y + &z) != &(&x * &y) + &(&x * &z)
            {
                return Err(format!("ring axiom failed on ({}, {}, {})", x, y, z));
            }
        }
        Ok("1000 random triples".into())
    });

    report.run("golden.field_inverses_and_signs", || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
        for _ in 0..500 {
            let x = rand_golden(&mut rng);
            let y = rand_golden(&mut rng);
            if !x.is_zero() {
                let inv = x.inverse().map_err(err_str)?;
                if !(&x * &inv).is_one() {
                    return Err(format!("{} times its inverse is not 1", x));
                }
            }
            if (&x * &y).sign() != x.sign() * y.sign() {
                return Err(format!("sign not multiplicative on ({}, {})", x, y));
            }
        }
        Ok("500 random pairs".into())
    });

    report.run("golden.galois_and_reduction", || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
        for _ in 0..500 {
            let x = rand_golden(&mut rng);
            let y = rand_golden(&mut rng);
            if (&x * &y).galois() != &x.galois() * &y.galois() {
                return Err(format!("galois not multiplicative on ({}, {})", x, y));
            }
            if x.galois().galois() != x {
                return Err(format!("galois not involutive on {}", x));
            }
            if (&x + &y).reduced() != x.reduced() + y.reduced() {
                return Err(format!("reduction not additive on ({}, {})", x, y));
            }
        }
        Ok("500 random pairs".into())
    });

    report.run("clifford.product_associativity", || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
        for _ in 0..1000 {
            let a = rand_multivector(&mut rng);
            let b = rand_multivector(&mut rng);
            let c = rand_multivector(&mut rng);
            if &(&a * &b) * &c != &a * &(&b * &c) {
                return Err("associativity failed on a random triple".into());
            }
        }
        Ok("1000 random triples".into())
    });

    report.run("clifford.reversal_antiautomorphism", || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
        for _ in 0..500 {
            let a = rand_multivector(&mut rng);
            let b = rand_multivector(&mut rng);
            if (&a * &b).reverse() != &b.reverse() * &a.reverse() {
                return Err("reversal failed to swap a product".into());
            }
        }
        Ok("500 random pairs".into())
    });

    report.run("clifford.pseudoscalar_central", || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
        let i = Multivector::pseudoscalar();
        for _ in 0..200 {
            let a = rand_multivector(&mut rng);
            if &a * &i != &i * &a {
                return Err("pseudoscalar failed to commute".into());
            }
        }
        Ok("200 random multivectors".into())
    });

    report.run("clifford.versor_action_orthogonal", || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
        for _ in 0..500 {
            let a = rand_versor(&mut rng);
            let v = Multivector::from_vector(&rand_nonzero_vector(&mut rng));
            let w = Multivector::from_vector(&rand_nonzero_vector(&mut rng));
            let av = a.apply(&v).map_err(err_str)?;
            let aw = a.apply(&w).map_err(err_str)?;
            if vector_dot(&av, &aw) != vector_dot(&v, &w) {
                return Err("versor action changed an inner product".into());
            }
        }
        Ok("500 random versor/vector cases".into())
    });
}

struct CatalogChain {
    pin: VersorGroup,
    induced: RootSystem,
}

fn d4_reference() -> CartanMatrix {
    int_matrix(&[
        vec![2, -1, -1, -1],
        vec![-1, 2, 0, 0],
        vec![-1, 0, 2, 0],
        vec![-1, 0, 0, 2],
    ])
}

fn f4_reference() -> CartanMatrix {
    int_matrix(&[
        vec![2, -1, 0, 0],
        vec![-1, 2, -2, 0],
        vec![0, -1, 2, -1],
        vec![0, 0, -1, 2],
    ])
}

fn h4_reference() -> CartanMatrix {
    let two = GoldenNum::from_int(2);
    let m1 = GoldenNum::from_int(-1);
    let mtau = -GoldenNum::tau();
    let z = GoldenNum::zero();
    CartanMatrix::from_entries(vec![
        vec![two.clone(), mtau.clone(), z.clone(), z.clone()],
        vec![mtau.clone(), two.clone(), m1.clone(), z.clone()],
        vec![z.clone(), m1.clone(), two.clone(), m1.clone()],
        vec![z.clone(), z.clone(), m1.clone(), two.clone()],
    ])
    .expect("square")
}

fn int_matrix(rows: &[Vec<i64>]) -> CartanMatrix {
    CartanMatrix::from_entries(
        rows.iter()
            .map(|r| r.iter().map(|&x| GoldenNum::from_int(x)).collect())
            .collect(),
    )
    .expect("square")
}

fn catalog_checks(report: &mut VerifyReport, name: SeedName) -> Option<CatalogChain> {
    let (expected_roots, expected_pin, expected_classes, expected_inversion) = match name {
        SeedName::A3 => (12usize, 48usize, 7usize, false),
        SeedName::B3 => (18, 96, 8, true),
        SeedName::H3 => (30, 240, 9, true),
    };

    let rs = match close_default(&seed(name)) {
        Ok(rs) => rs,
        Err(e) => {
            report.run("rootsys.closure", || Err(err_str(e)));
            return None;
        }
    };

    report.run("rootsys.closure_count", || {
        expect_eq("root count", rs.len(), expected_roots)
    });

    report.run("rootsys.axioms", || {
        let r = verify_axioms(&rs);
        match r.violation {
            None => Ok("both axioms hold".into()),
            Some(v) => Err(v),
        }
    });

    report.run("rootsys.extraction_cartan", || {
        let simple = extract_simple_roots(&rs).map_err(err_str)?;
        let extracted = cartan(&simple).map_err(err_str)?;
        let reference = cartan(&seed(name)).map_err(err_str)?;
        if !extracted.permutation_equivalent(&reference) {
            return Err("extracted Cartan matrix is not equivalent to the seed's".into());
        }
        let graph = dynkin(&extracted).map_err(err_str)?;
        let mut labels: Vec<u32> = graph.edges().iter().map(|&(_, _, m)| m).collect();
        labels.sort_unstable();
        let expected_labels = match name {
            SeedName::A3 => vec![3, 3],
            SeedName::B3 => vec![3, 4],
            SeedName::H3 => vec![3, 5],
        };
        expect_eq("bond labels", labels, expected_labels)
    });

    report.run("rootsys.close_idempotence", || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
        let all: Vec<GoldenVec> = rs.iter().cloned().collect();
        for case in 0..60 {
            let subset: Vec<GoldenVec> = if case < 10 {
                let dense: Vec<GoldenVec> =
                    all.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
                if dense.is_empty() {
                    vec![all[rng.gen_range(0..all.len())].clone()]
                } else {
                    dense
                }
            } else {
                let k = rng.gen_range(1..=5);
                all.choose_multiple(&mut rng, k).cloned().collect()
            };
            let once = close_default(&subset).map_err(err_str)?;
            let roots: Vec<GoldenVec> = once.iter().cloned().collect();
            let twice = close_default(&roots).map_err(err_str)?;
            if once.roots() != twice.roots() {
                return Err("closing a closed set changed it".into());
            }
        }
        Ok("60 random subsets".into())
    });

    let pin = match generate_pin_default(&rs) {
        Ok(p) => p,
        Err(e) => {
            report.run("versor.pin_generation", || Err(err_str(e)));
            return None;
        }
    };

    report.run("versor.pin_order", || {
        expect_eq("pinor group order", pin.order(), expected_pin)
    });

    let spin = even_subgroup(&pin);

    report.run("versor.spin_order", || {
        if pin.order() != 2 * spin.order() {
            return Err(format!(
                "even subgroup order {} is not half of {}",
                spin.order(),
                pin.order()
            ));
        }
        expect_eq("spinor group order", spin.order(), expected_pin / 2)
    });

    report.run("versor.identity_and_double_cover", || {
        let one = Versor::try_new(Multivector::one()).map_err(err_str)?;
        if !pin.contains(&one) {
            return Err("identity missing".into());
        }
        for a in pin.iter() {
            let neg = Versor::try_new(-a.value().clone()).map_err(err_str)?;
            if !pin.contains(&neg) {
                return Err(format!("negative of {} missing", a));
            }
        }
        Ok(format!("1 and -A present for all {} elements", pin.order()))
    });

    report.run("versor.inverses", || {
        let one = Versor::try_new(Multivector::one()).map_err(err_str)?;
        for a in pin.iter() {
            let inv = inverse_of(a).map_err(err_str)?;
            if !pin.contains(&inv) {
                return Err(format!("inverse of {} missing", a));
            }
            let prod = canonicalize(&Versor::try_new(a.value() * inv.value()).map_err(err_str)?)
                .map_err(err_str)?;
            if prod != one {
                return Err(format!("inverse of {} does not invert", a));
            }
        }
        Ok(format!("all {} inverses verified", pin.order()))
    });

    report.run("versor.closure_table", || {
        for a in pin.iter() {
            for b in pin.iter() {
                let ab = canonicalize(&Versor::try_new(a.value() * b.value()).map_err(err_str)?)
                    .map_err(err_str)?;
                if !pin.contains(&ab) {
                    return Err("a canonical product escaped the group".into());
                }
            }
        }
        Ok(format!("{} products stay inside", pin.order() * pin.order()))
    });

    report.run("versor.conjugacy_classes", || {
        let sizes = conjugacy_class_sizes(&spin).map_err(err_str)?;
        if sizes.iter().sum::<usize>() != spin.order() {
            return Err("class sizes do not sum to the group order".into());
        }
        if sizes.iter().take(2).any(|&s| s != 1) {
            return Err("the two central singleton classes are missing".into());
        }
        expect_eq("class count", sizes.len(), expected_classes)
    });

    report.run("versor.inversion_membership", || {
        expect_eq("contains inversion", contains_inversion(&pin), expected_inversion)
    });

    if name == SeedName::H3 {
        report.run("versor.distinct_actions", || {
            let rotations = distinct_action_count(&spin).map_err(err_str)?;
            if rotations != 60 {
                return Err(format!("expected 60 rotations, got {}", rotations));
            }
            let actions = distinct_action_count(&pin).map_err(err_str)?;
            expect_eq("distinct actions (rotations = 60)", actions, 120)
        });
    }

    let induced = match induce_from_pin(&pin) {
        Ok(rs4) => rs4,
        Err(e) => {
            report.run("induce.image", || Err(err_str(e)));
            return None;
        }
    };

    report.run("induce.count_and_norms", || {
        let tally = induced.norm_sq_tally();
        let expected_tally: BTreeMap<GoldenNum, usize> = match name {
            SeedName::A3 => BTreeMap::from([(GoldenNum::one(), 24)]),
            SeedName::B3 => {
                BTreeMap::from([(GoldenNum::one(), 24), (GoldenNum::from_int(2), 24)])
            }
            SeedName::H3 => BTreeMap::from([(GoldenNum::one(), 120)]),
        };
        if tally != expected_tally {
            return Err(format!("unexpected norm tally {:?}", tally));
        }
        expect_eq("induced root count", induced.len(), expected_pin / 2)
    });

    report.run("induce.axioms", || {
        let r = verify_axioms(&induced);
        match r.violation {
            None => Ok("both axioms hold on the 4D image".into()),
            Some(v) => Err(v),
        }
    });

    report.run("induce.cartan_class", || {
        let simple = extract_simple_roots(&induced).map_err(err_str)?;
        let extracted = cartan(&simple).map_err(err_str)?;
        let (reference, label) = match name {
            SeedName::A3 => (d4_reference(), "D4"),
            SeedName::B3 => (f4_reference(), "F4"),
            SeedName::H3 => (h4_reference(), "H4"),
        };
        if extracted.permutation_equivalent(&reference) {
            Ok(format!("Cartan class {}", label))
        } else {
            Err(format!("extracted Cartan is not of class {}", label))
        }
    });

    report.run("induce.spinorial_symmetry", || {
        let r = check_spinorial_symmetry(&spin, &induced).map_err(err_str)?;
        if !r.passed() {
            return Err(format!(
                "only {} left and {} right of {} multiplications permute the set",
                r.left_permutations, r.right_permutations, r.total
            ));
        }
        Ok(format!(
            "{} left and {} right multiplications permute the set",
            r.left_permutations, r.right_permutations
        ))
    });

    report.run("induce.reflection_identity", || {
        // R2 - 2 (R1,R2)/(R1,R1) R1 must equal -R1 reverse(R2) R1 scaled by
        // the norm of R1.
        for r1 in spin.iter() {
            let n1 = spinor_inner(r1, r1).map_err(err_str)?;
            let n1_inv = n1.inverse().map_err(err_str)?;
            for r2 in spin.iter() {
                let ip = spinor_inner(r1, r2).map_err(err_str)?;
                let coeff = GoldenNum::from_int(2) * ip * &n1_inv;
                let lhs = r2.value() - &r1.value().scale_golden(&coeff);
                let sandwich = &(r1.value() * r2.reverse().value()) * r1.value();
                let rhs = -&sandwich.scale_golden(&n1_inv);
                if lhs != rhs {
                    return Err("spinor reflection identity failed".into());
                }
            }
        }
        Ok(format!(
            "{} spinor pairs agree with the 4D reflection formula",
            spin.order() * spin.order()
        ))
    });

    report.run("json.root_system_round_trip", || {
        let json = serde_json::to_string(&induced).map_err(|e| e.to_string())?;
        let back: RootSystem = serde_json::from_str(&json).map_err(|e| e.to_string())?;
        if back != induced {
            return Err("root system changed across a JSON round-trip".into());
        }
        let again = serde_json::to_string(&back).map_err(|e| e.to_string())?;
        expect_eq("re-emitted JSON identical", again == json, true)
    });

    report.run("json.versor_elements_round_trip", || {
        let elements: Vec<&Versor> = pin.iter().collect();
        let json = serde_json::to_string(&elements).map_err(|e| e.to_string())?;
        let back: Vec<Versor> = serde_json::from_str(&json).map_err(|e| e.to_string())?;
        let same = back.len() == elements.len()
            && back.iter().zip(&elements).all(|(x, y)| x == *y);
        expect_eq("versor list identical", same, true)
    });

    Some(CatalogChain { pin, induced })
}

fn e8_checks(report: &mut VerifyReport, chain: &CatalogChain) {
    let set = match build_e8(&chain.pin) {
        Ok(s) => s,
        Err(e) => {
            report.run("e8.build", || Err(err_str(e)));
            return;
        }
    };

    report.run("e8.build_240", || expect_eq("vector count", set.len(), 240));

    report.run("e8.reduced_unit_norms", || {
        for r in set.iter() {
            if !reduced_ip(r, r).is_one() {
                return Err(format!("{} has reduced norm != 1", r));
            }
        }
        Ok("all 240 reduced norms are 1".into())
    });

    report.run("e8.tau_decomposition", || {
        let tau = GoldenNum::tau();
        let h4: BTreeSet<GoldenVec> = chain.induced.roots().clone();
        let scaled: BTreeSet<GoldenVec> = h4.iter().map(|v| v.scale(&tau)).collect();
        if !h4.is_disjoint(&scaled) {
            return Err("the H4 image and its tau-multiple overlap".into());
        }
        let union: BTreeSet<GoldenVec> = h4.union(&scaled).cloned().collect();
        if &union != set.roots() {
            return Err("the 240-set is not the union of H4 and tau H4".into());
        }
        Ok("disjoint union of the 120-set and its tau-multiple".into())
    });

    report.run("e8.worked_inner_products", || {
        let s = set.simple_roots();
        let half = BigRational::new(BigInt::from(-1), BigInt::from(2));
        let zero = BigRational::from_integer(BigInt::from(0));
        let cases = [
            (0usize, 1usize, half.clone()),
            (2, 3, zero),
            (6, 7, half.clone()),
            (6, 3, half),
        ];
        for (i, j, want) in cases {
            let got = reduced_ip(&s[i], &s[j]);
            if got != want {
                return Err(format!(
                    "(alpha{}, alpha{}) = {}, expected {}",
                    i + 1,
                    j + 1,
                    got,
                    want
                ));
            }
        }
        Ok("four worked products match".into())
    });

    report.run("e8.cartan_matrix", || {
        let expected = int_matrix(&[
            vec![2, -1, 0, 0, 0, 0, 0, 0],
            vec![-1, 2, -1, 0, 0, 0, 0, 0],
            vec![0, -1, 2, 0, 0, 0, 0, -1],
            vec![0, 0, 0, 2, 0, 0, -1, 0],
            vec![0, 0, 0, 0, 2, -1, 0, 0],
            vec![0, 0, 0, 0, -1, 2, -1, 0],
            vec![0, 0, 0, -1, 0, -1, 2, -1],
            vec![0, 0, -1, 0, 0, 0, -1, 2],
        ]);
        let got = cartan_e8(&set).map_err(err_str)?;
        expect_eq("matrix equals the E8 matrix", got == expected, true)
    });

    report.run("e8.dynkin_tree", || {
        let graph = dynkin(&cartan_e8(&set).map_err(err_str)?).map_err(err_str)?;
        if graph.edges().len() != 7 || graph.edges().iter().any(|&(_, _, m)| m != 3) {
            return Err("expected 7 unlabelled bonds".into());
        }
        if !graph.is_tree() {
            return Err("diagram is not a tree".into());
        }
        expect_eq(
            "degree sequence",
            graph.degree_sequence(),
            vec![1, 1, 1, 2, 2, 2, 2, 3],
        )
    });

    report.run("e8.reflection_closure", || {
        let mut count = 0usize;
        for mirror in set.iter() {
            for v in set.iter() {
                let image = reduced_reflect(mirror, v).map_err(err_str)?;
                if !set.contains(&image) {
                    return Err(format!("reflection of {} in {} escaped", v, mirror));
                }
                count += 1;
            }
        }
        Ok(format!("{} reflections stay inside", count))
    });

    report.run("e8.isometry_8d", || {
        let roots: Vec<&GoldenVec> = set.iter().collect();
        let expanded: Vec<Vec<BigRational>> = roots.iter().map(|r| expand_8d(r)).collect();
        for i in 0..roots.len() {
            for j in 0..roots.len() {
                let dot: BigRational = expanded[i]
                    .iter()
                    .zip(&expanded[j])
                    .map(|(x, y)| x * y)
                    .sum();
                if dot != reduced_ip(roots[i], roots[j]) {
                    return Err("expansion broke an inner product".into());
                }
            }
        }
        Ok(format!("{} pairs agree", roots.len() * roots.len()))
    });

    report.run("e8.neighbor_profile", || {
        let roots: Vec<&GoldenVec> = set.iter().collect();
        let expected: BTreeMap<BigRational, usize> = BTreeMap::from([
            (BigRational::from_integer(BigInt::from(1)), 1),
            (BigRational::from_integer(BigInt::from(-1)), 1),
            (BigRational::new(BigInt::from(1), BigInt::from(2)), 56),
            (BigRational::new(BigInt::from(-1), BigInt::from(2)), 56),
            (BigRational::from_integer(BigInt::from(0)), 126),
        ]);
        for r in &roots {
            let mut tally: BTreeMap<BigRational, usize> = BTreeMap::new();
            for s in &roots {
                *tally.entry(reduced_ip(r, s)).or_insert(0) += 1;
            }
            if tally != expected {
                return Err(format!("profile of {} deviates", r));
            }
        }
        Ok("all 240 roots see {1:1, -1:1, 1/2:56, -1/2:56, 0:126}".into())
    });

    report.run("e8.coxeter_number", || {
        let h = coxeter_number(&set).map_err(err_str)?;
        if h != set.len() / set.simple_roots().len() {
            return Err(format!("{} != 240 / 8", h));
        }
        expect_eq("Coxeter number", h, 30)
    });

    report.run("e8.simple_root_membership", || {
        let tau = GoldenNum::tau();
        let s = set.simple_roots();
        for (k, a) in s.iter().enumerate() {
            if !set.contains(a) {
                return Err(format!("alpha{} not in the set", k + 1));
            }
            if k >= 4 && *a != s[k - 4].scale(&tau) {
                return Err(format!("alpha{} is not tau alpha{}", k + 1, k - 3));
            }
        }
        Ok("all 8 designated simple roots are members, second half tau-scaled".into())
    });
}

/// Runs the full invariant suite for one target and returns the table.
pub fn verify(target: VerifyTarget) -> VerifyReport {
    let mut report = VerifyReport::default();
    numeric_checks(&mut report);
    match target {
        VerifyTarget::A3 => {
            catalog_checks(&mut report, SeedName::A3);
        }
        VerifyTarget::B3 => {
            catalog_checks(&mut report, SeedName::B3);
        }
        VerifyTarget::H3 => {
            catalog_checks(&mut report, SeedName::H3);
        }
        VerifyTarget::E8 => {
            if let Some(chain) = catalog_checks(&mut report, SeedName::H3) {
                e8_checks(&mut report, &chain);
            }
        }
    }
    report
}
