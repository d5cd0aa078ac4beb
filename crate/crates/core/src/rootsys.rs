//! Root systems as exact golden-vector sets.
//!
//! Carries the three seed systems (A3, B3, H3; the last with unit roots in
//! the icosahedral orientation whose simple roots are `e2`,
//! `-((tau-1) e1 + e2 + tau e3)/2`, `e3`), reflection closure with a cap,
//! the two defining axioms, Cartan matrices, Dynkin diagrams, and recovery
//! of a simple system from a bare root set.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::golden::GoldenNum;
use crate::{Error, Result, DEFAULT_CAP};

/// A vector with golden coordinates. Ordered lexicographically by exact
/// real value, which fixes the canonical enumeration order everywhere.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GoldenVec(Vec<GoldenNum>);

impl GoldenVec {
    pub fn new(coords: Vec<GoldenNum>) -> Self {
        GoldenVec(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[GoldenNum] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &GoldenNum {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(GoldenNum::is_zero)
    }

    pub fn dot(&self, other: &GoldenVec) -> GoldenNum {
        assert_eq!(self.dim(), other.dim(), "dot of mismatched dimensions");
        let mut acc = GoldenNum::zero();
        for (x, y) in self.0.iter().zip(&other.0) {
            acc = acc + x * y;
        }
        acc
    }

    pub fn norm_sq(&self) -> GoldenNum {
        self.dot(self)
    }

    pub fn add(&self, other: &GoldenVec) -> GoldenVec {
        assert_eq!(self.dim(), other.dim());
        GoldenVec(self.0.iter().zip(&other.0).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, other: &GoldenVec) -> GoldenVec {
        assert_eq!(self.dim(), other.dim());
        GoldenVec(self.0.iter().zip(&other.0).map(|(x, y)| x - y).collect())
    }

    pub fn scale(&self, c: &GoldenNum) -> GoldenVec {
        GoldenVec(self.0.iter().map(|x| x * c).collect())
    }
}

impl Neg for &GoldenVec {
    type Output = GoldenVec;
    fn neg(self) -> GoldenVec {
        GoldenVec(self.0.iter().map(|x| -x).collect())
    }
}

impl Neg for GoldenVec {
    type Output = GoldenVec;
    fn neg(self) -> GoldenVec {
        -&self
    }
}

impl fmt::Display for GoldenVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|x| x.to_string()).join(", "))
    }
}

impl fmt::Debug for GoldenVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Reflects `v` in the hyperplane orthogonal to `mirror`:
/// `v - 2 (v|mirror)/(mirror|mirror) mirror`.
pub fn reflect(mirror: &GoldenVec, v: &GoldenVec) -> Result<GoldenVec> {
    if mirror.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let coeff = (GoldenNum::from_int(2) * v.dot(mirror)) * mirror.norm_sq().inverse()?;
    Ok(v.sub(&mirror.scale(&coeff)))
}

/// A finite set of nonzero vectors sharing one dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    dim: usize,
    roots: BTreeSet<GoldenVec>,
}

impl RootSystem {
    pub fn from_roots(dim: usize, roots: impl IntoIterator<Item = GoldenVec>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for r in roots {
            if r.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: r.dim(),
                });
            }
            if r.is_zero() {
                return Err(Error::ZeroRoot);
            }
            set.insert(r);
        }
        Ok(RootSystem { dim, roots: set })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

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

    /// Multiset of squared lengths, e.g. `{1: 24, 2: 24}` for F4.
    pub fn norm_sq_tally(&self) -> BTreeMap<GoldenNum, usize> {
        let mut tally = BTreeMap::new();
        for r in &self.roots {
            *tally.entry(r.norm_sq()).or_insert(0) += 1;
        }
        tally
    }
}

impl Serialize for RootSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            dim: usize,
            roots: Vec<&'a GoldenVec>,
        }
        Repr {
            dim: self.dim,
            roots: self.roots.iter().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RootSystem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            dim: usize,
            roots: Vec<GoldenVec>,
        }
        let repr = Repr::deserialize(d)?;
        RootSystem::from_roots(repr.dim, repr.roots).map_err(serde::de::Error::custom)
    }
}

/// The three catalogued 3D seeds.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SeedName {
    A3,
    B3,
    H3,
}

impl FromStr for SeedName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A3" => Ok(SeedName::A3),
            "B3" => Ok(SeedName::B3),
            "H3" => Ok(SeedName::H3),
            _ => Err(Error::UnknownSeed(s.to_string())),
        }
    }
}

impl fmt::Display for SeedName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeedName::A3 => write!(f, "A3"),
            SeedName::B3 => write!(f, "B3"),
            SeedName::H3 => write!(f, "H3"),
        }
    }
}

fn gv(coords: [GoldenNum; 3]) -> GoldenVec {
    GoldenVec::new(coords.to_vec())
}

/// Simple roots of the named seed, ordered so the Cartan matrix comes out
/// in path form (one bond per consecutive pair).
pub fn seed(name: SeedName) -> Vec<GoldenVec> {
    let z = GoldenNum::zero;
    let one = GoldenNum::one;
    match name {
        // e2 - e3, e1 - e2, e2 + e3: same tetrahedral root set as the
        // textbook chain, ordered for a tridiagonal Cartan matrix.
        SeedName::A3 => vec![
            gv([z(), one(), -one()]),
            gv([one(), -one(), z()]),
            gv([z(), one(), one()]),
        ],
        // e1 - e2, e2 - e3, e3: two long roots and a short one.
        SeedName::B3 => vec![
            gv([one(), -one(), z()]),
            gv([z(), one(), -one()]),
            gv([z(), z(), one()]),
        ],
        // e2, -((tau-1) e1 + e2 + tau e3)/2, e3: unit icosahedral roots.
        SeedName::H3 => vec![
            gv([z(), one(), z()]),
            gv([
                GoldenNum::from_parts(1, 2, -1, 2),
                GoldenNum::from_parts(-1, 2, 0, 1),
                GoldenNum::from_parts(0, 1, -1, 2),
            ]),
            gv([z(), z(), one()]),
        ],
    }
}

/// Closes a set of roots under reflection in every member, to a fixpoint.
///
/// Starts from the given roots and their negatives. Aborts with
/// [`Error::CapExceeded`] once the set would outgrow `cap` (non-root-system
/// angles generate infinite reflection orbits).
pub fn close(seed_roots: &[GoldenVec], cap: usize) -> Result<RootSystem> {
    if seed_roots.is_empty() {
        return Err(Error::Construction("cannot close an empty seed".into()));
    }
    let dim = seed_roots[0].dim();
    let two = GoldenNum::from_int(2);
    let mut members: BTreeSet<GoldenVec> = BTreeSet::new();
    // Discovery order, each root with its cached 2/(r|r).
    let mut queue: Vec<(GoldenVec, GoldenNum)> = Vec::new();

    fn push_new(
        r: GoldenVec,
        cap: usize,
        two: &GoldenNum,
        members: &mut BTreeSet<GoldenVec>,
        queue: &mut Vec<(GoldenVec, GoldenNum)>,
    ) -> Result<()> {
        if members.contains(&r) {
            return Ok(());
        }
        if members.len() >= cap {
            return Err(Error::CapExceeded(cap));
        }
        let inv2 = two * r.dot(&r).inverse()?;
        members.insert(r.clone());
        queue.push((r, inv2));
        Ok(())
    }

    for r in seed_roots {
        if r.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: r.dim(),
            });
        }
        if r.is_zero() {
            return Err(Error::ZeroRoot);
        }
        push_new(r.clone(), cap, &two, &mut members, &mut queue)?;
        push_new(-r, cap, &two, &mut members, &mut queue)?;
    }

    // Breadth-first to the fixpoint: all pairs within queue[..processed] are
    // already reflected, so each pass only pairs the newest batch with
    // everything seen so far (in both mirror/vector roles).
    let mut processed = 0;
    while processed < queue.len() {
        let hi = queue.len();
        for i in processed..hi {
            for j in 0..hi {
                let image = {
                    let (m, inv2) = &queue[i];
                    let (v, _) = &queue[j];
                    v.sub(&m.scale(&(v.dot(m) * inv2)))
                };
                push_new(image, cap, &two, &mut members, &mut queue)?;
                if j < processed {
                    let image = {
                        let (m, inv2) = &queue[j];
                        let (v, _) = &queue[i];
                        v.sub(&m.scale(&(v.dot(m) * inv2)))
                    };
                    push_new(image, cap, &two, &mut members, &mut queue)?;
                }
            }
        }
        processed = hi;
    }
    Ok(RootSystem {
        dim,
        roots: members,
    })
}

/// Closes with the default cap of 10,000 elements.
pub fn close_default(seed_roots: &[GoldenVec]) -> Result<RootSystem> {
    close(seed_roots, DEFAULT_CAP)
}

/// Outcome of the axiom check: `violation` names the first failure.
#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub violation: Option<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(f, "both root system axioms hold"),
            Some(v) => write!(f, "axiom violation: {}", v),
        }
    }
}

/// Checks the two root-system axioms: the only real multiples of a root in
/// the set are the root and its negative, and the set is closed under
/// reflection in each of its members.
pub fn verify_axioms(rs: &RootSystem) -> AxiomReport {
    // Axiom 1, via exact direction keys: scaling a root by the inverse of
    // its first nonzero coordinate canonicalizes its line through the
    // origin, so each key class must be exactly a {v, -v} pair.
    let mut lines: BTreeMap<GoldenVec, Vec<&GoldenVec>> = BTreeMap::new();
    for r in rs.iter() {
        let lead = r
            .coords()
            .iter()
            .find(|x| !x.is_zero())
            .expect("roots are nonzero");
        let key = r.scale(&lead.inverse().expect("nonzero leading coordinate"));
        lines.entry(key).or_default().push(r);
    }
    for (_, class) in lines {
        match class.as_slice() {
            [u, v] if **u == -*v => {}
            _ => {
                return AxiomReport {
                    violation: Some(format!(
                        "the multiples of {} in the set are not exactly the pair ±{}",
                        class[0], class[0]
                    )),
                };
            }
        }
    }
    // Axiom 2: reflection closure, with each mirror's norm factor hoisted
    // out of the inner loop.
    let two = GoldenNum::from_int(2);
    for mirror in rs.iter() {
        let inv2 = &two * mirror.dot(mirror).inverse().expect("roots are nonzero");
        for v in rs.iter() {
            let image = v.sub(&mirror.scale(&(v.dot(mirror) * &inv2)));
            if !rs.contains(&image) {
                return AxiomReport {
                    violation: Some(format!(
                        "reflecting {} in {} gives {}, which is not in the set",
                        v, mirror, image
                    )),
                };
            }
        }
    }
    AxiomReport { violation: None }
}

/// A square matrix `A_ij = 2 (a_i|a_j) / (a_j|a_j)` over the golden field.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanMatrix {
    entries: Vec<Vec<GoldenNum>>,
}

impl CartanMatrix {
    pub fn from_entries(entries: Vec<Vec<GoldenNum>>) -> Result<Self> {
        let n = entries.len();
        for row in &entries {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
        }
        Ok(CartanMatrix { entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &GoldenNum {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<GoldenNum>] {
        &self.entries
    }

    /// True when some simultaneous row/column permutation carries `self`
    /// onto `other`; simple systems of one root system always compare equal
    /// this way regardless of enumeration order.
    pub fn permutation_equivalent(&self, other: &CartanMatrix) -> bool {
        let n = self.size();
        if other.size() != n {
            return false;
        }
        (0..n).permutations(n).any(|p| {
            (0..n).all(|i| (0..n).all(|j| self.entries[p[i]][p[j]] == other.entries[i][j]))
        })
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(String::len)
            .max()
            .unwrap_or(1);
        for row in &cells {
            let line = row
                .iter()
                .map(|c| format!("{:>width$}", c, width = width))
                .join("  ");
            writeln!(f, "{}", line)?;
        }
        Ok(())
    }
}

impl fmt::Debug for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// The Cartan matrix of an ordered simple system.
pub fn cartan(simple: &[GoldenVec]) -> Result<CartanMatrix> {
    let two = GoldenNum::from_int(2);
    let mut entries = Vec::with_capacity(simple.len());
    for a_i in simple {
        let mut row = Vec::with_capacity(simple.len());
        for a_j in simple {
            if a_j.is_zero() {
                return Err(Error::ZeroRoot);
            }
            row.push(&two * &a_i.dot(a_j) * a_j.norm_sq().inverse()?);
        }
        entries.push(row);
    }
    CartanMatrix::from_entries(entries)
}

/// An undirected labelled graph on simple-root nodes; edge labels are the
/// bond marks m >= 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinGraph {
    nodes: usize,
    edges: Vec<(usize, usize, u32)>,
}

impl DynkinGraph {
    pub fn nodes(&self) -> usize {
        self.nodes
    }

    /// Edges `(i, j, m)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize, u32)] {
        &self.edges
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.nodes];
        for (i, j, _) in &self.edges {
            deg[*i] += 1;
            deg[*j] += 1;
        }
        deg.sort_unstable();
        deg
    }

    /// Connected and acyclic.
    pub fn is_tree(&self) -> bool {
        if self.nodes == 0 {
            return false;
        }
        if self.edges.len() + 1 != self.nodes {
            return false;
        }
        let mut adj = vec![Vec::new(); self.nodes];
        for (i, j, _) in &self.edges {
            adj[*i].push(*j);
            adj[*j].push(*i);
        }
        let mut seen = vec![false; self.nodes];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(k) = stack.pop() {
            for &next in &adj[k] {
                if !seen[next] {
                    seen[next] = true;
                    stack.push(next);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Deterministic DOT rendering; the conventional unlabelled bond (m=3)
    /// carries no label attribute.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph dynkin {\n  node [shape=circle];\n");
        for i in 0..self.nodes {
            out.push_str(&format!("  n{} [label=\"α{}\"];\n", i + 1, i + 1));
        }
        for (i, j, m) in &self.edges {
            if *m == 3 {
                out.push_str(&format!("  n{} -- n{};\n", i + 1, j + 1));
            } else {
                out.push_str(&format!("  n{} -- n{} [label={}];\n", i + 1, j + 1, m));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Reads the diagram off a Cartan matrix: the product `A_ij A_ji` decides
/// the bond (0 none, 1 simple, 2 double, 1+tau the five-bond, 3 the
/// six-bond).
pub fn dynkin(c: &CartanMatrix) -> Result<DynkinGraph> {
    let n = c.size();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let p = c.entry(i, j) * c.entry(j, i);
            let label = if p.is_zero() {
                continue;
            } else if p.is_one() {
                3
            } else if p == GoldenNum::from_int(2) {
                4
            } else if p == GoldenNum::from_parts(1, 1, 1, 1) {
                5
            } else if p == GoldenNum::from_int(3) {
                6
            } else {
                return Err(Error::UnknownBond(p.to_string()));
            };
            edges.push((i, j, label));
        }
    }
    edges.sort_unstable();
    Ok(DynkinGraph { nodes: n, edges })
}

const EXTRACT_ATTEMPTS: usize = 8;

/// Recovers a simple system from a full root set: a generic height
/// functional (weights tau^(i+1), deterministically perturbed while any
/// root lands on zero) splits the set into positive and negative halves,
/// and a positive root is simple exactly when reflecting in it sends no
/// other positive root negative. (The crystallographic shortcut, simple =
/// not a sum of two positive roots, fails for golden-coefficient systems
/// like H3, where tau-scaled combinations are invisible to plain sums.)
/// Returned in canonical order. Assumes `rs` satisfies the axioms.
pub fn extract_simple_roots(rs: &RootSystem) -> Result<Vec<GoldenVec>> {
    let tau = GoldenNum::tau();
    'attempt: for bump in 0..EXTRACT_ATTEMPTS {
        let mut weights = Vec::with_capacity(rs.dim());
        let mut w = tau.clone();
        for _ in 0..rs.dim() {
            w = &w * &tau;
            weights.push(w.clone());
        }
        if let Some(last) = weights.last_mut() {
            *last = &*last + &GoldenNum::from_int(bump as i64);
        }
        let mut positive: Vec<&GoldenVec> = Vec::new();
        for v in rs.iter() {
            let mut height = GoldenNum::zero();
            for (w_i, x) in weights.iter().zip(v.coords()) {
                height = height + w_i * x;
            }
            match height.sign() {
                0 => continue 'attempt,
                1 => positive.push(v),
                _ => {}
            }
        }
        let positive_set: BTreeSet<GoldenVec> = positive.iter().map(|v| (*v).clone()).collect();
        let mut simple = Vec::new();
        'candidate: for a in &positive {
            for b in &positive {
                if b == a {
                    continue;
                }
                if !positive_set.contains(&reflect(a, b)?) {
                    continue 'candidate;
                }
            }
            simple.push((*a).clone());
        }
        return Ok(simple);
    }
    Err(Error::DegenerateFunctional(EXTRACT_ATTEMPTS))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(an: i64, ad: i64, bn: i64, bd: i64) -> GoldenNum {
        GoldenNum::from_parts(an, ad, bn, bd)
    }

    fn iv(coords: [i64; 3]) -> GoldenVec {
        GoldenVec::new(coords.iter().map(|&c| GoldenNum::from_int(c)).collect())
    }

    #[test]
    fn seeds_have_the_documented_coordinates() {
        assert_eq!(
            seed(SeedName::A3),
            vec![iv([0, 1, -1]), iv([1, -1, 0]), iv([0, 1, 1])]
        );
        assert_eq!(
            seed(SeedName::B3),
            vec![iv([1, -1, 0]), iv([0, 1, -1]), iv([0, 0, 1])]
        );
        let h3 = seed(SeedName::H3);
        assert_eq!(h3[0], iv([0, 1, 0]));
        assert_eq!(
            h3[1],
            GoldenVec::new(vec![g(1, 2, -1, 2), g(-1, 2, 0, 1), g(0, 1, -1, 2)])
        );
        assert_eq!(h3[2], iv([0, 0, 1]));
        // All three H3 simple roots are unit vectors.
        for r in &h3 {
            assert!(r.norm_sq().is_one());
        }
    }

    #[test]
    fn a3_closure_is_the_twelve_pair_sums() {
        let rs = close_default(&seed(SeedName::A3)).unwrap();
        assert_eq!(rs.len(), 12);
        let mut expected = BTreeSet::new();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut coords = [0i64; 3];
                coords[i] = si;
                coords[j] = sj;
                expected.insert(iv(coords));
            }
        }
        assert_eq!(rs.roots(), &expected);
    }

    #[test]
    fn b3_closure_adds_the_six_axis_roots() {
        let rs = close_default(&seed(SeedName::B3)).unwrap();
        assert_eq!(rs.len(), 18);
        let a3 = close_default(&seed(SeedName::A3)).unwrap();
        for r in a3.iter() {
            assert!(rs.contains(r));
        }
        for i in 0..3 {
            let mut coords = [0i64; 3];
            coords[i] = 1;
            assert!(rs.contains(&iv(coords)));
            coords[i] = -1;
            assert!(rs.contains(&iv(coords)));
        }
        assert_eq!(
            rs.norm_sq_tally(),
            BTreeMap::from([(GoldenNum::one(), 6), (GoldenNum::from_int(2), 12)])
        );
    }

    #[test]
    fn h3_closure_has_thirty_unit_roots_including_the_axes() {
        let rs = close_default(&seed(SeedName::H3)).unwrap();
        assert_eq!(rs.len(), 30);
        for r in rs.iter() {
            assert!(r.norm_sq().is_one());
        }
        for i in 0..3 {
            let mut coords = [0i64; 3];
            coords[i] = 1;
            assert!(rs.contains(&iv(coords)));
        }
    }

    #[test]
    fn closing_a_single_root_gives_the_pair() {
        let rs = close_default(&[iv([1, 0, 0])]).unwrap();
        assert_eq!(rs.len(), 2);
        assert!(rs.contains(&iv([1, 0, 0])));
        assert!(rs.contains(&iv([-1, 0, 0])));
    }

    #[test]
    fn non_crystallographic_angle_exceeds_the_cap() {
        // cos = -3/5 is not the cosine of pi/m for any m, so the dihedral
        // orbit never closes.
        let u = iv([1, 0, 0]);
        let v = GoldenVec::new(vec![g(-3, 5, 0, 1), g(4, 5, 0, 1), GoldenNum::zero()]);
        assert!(matches!(
            close(&[u, v], 100),
            Err(Error::CapExceeded(100))
        ));
    }

    #[test]
    fn close_is_idempotent_on_the_catalog() {
        for name in [SeedName::A3, SeedName::B3, SeedName::H3] {
            let rs = close_default(&seed(name)).unwrap();
            let all: Vec<GoldenVec> = rs.iter().cloned().collect();
            let again = close_default(&all).unwrap();
            assert_eq!(again.roots(), rs.roots());
        }
    }

    #[test]
    fn catalog_closures_satisfy_the_axioms() {
        for name in [SeedName::A3, SeedName::B3, SeedName::H3] {
            let rs = close_default(&seed(name)).unwrap();
            let report = verify_axioms(&rs);
            assert!(report.passed(), "{}: {}", name, report);
        }
    }

    #[test]
    fn axiom_check_catches_missing_negative_and_extra_multiple() {
        let lone = RootSystem::from_roots(3, vec![iv([1, 0, 0])]).unwrap();
        assert!(!verify_axioms(&lone).passed());

        let doubled = RootSystem::from_roots(
            3,
            vec![iv([1, 0, 0]), iv([-1, 0, 0]), iv([2, 0, 0]), iv([-2, 0, 0])],
        )
        .unwrap();
        assert!(!verify_axioms(&doubled).passed());
    }

    #[test]
    fn cartan_matrices_of_the_seeds() {
        let two = GoldenNum::from_int(2);
        let m1 = GoldenNum::from_int(-1);
        let z = GoldenNum::zero();

        let a3 = cartan(&seed(SeedName::A3)).unwrap();
        assert_eq!(
            a3.rows(),
            &[
                vec![two.clone(), m1.clone(), z.clone()],
                vec![m1.clone(), two.clone(), m1.clone()],
                vec![z.clone(), m1.clone(), two.clone()],
            ]
        );

        let b3 = cartan(&seed(SeedName::B3)).unwrap();
        assert_eq!(
            b3.rows(),
            &[
                vec![two.clone(), m1.clone(), z.clone()],
                vec![m1.clone(), two.clone(), GoldenNum::from_int(-2)],
                vec![z.clone(), m1.clone(), two.clone()],
            ]
        );

        let mtau = -GoldenNum::tau();
        let h3 = cartan(&seed(SeedName::H3)).unwrap();
        assert_eq!(
            h3.rows(),
            &[
                vec![two.clone(), m1.clone(), z.clone()],
                vec![m1.clone(), two.clone(), mtau.clone()],
                vec![z.clone(), mtau.clone(), two.clone()],
            ]
        );
    }

    #[test]
    fn dynkin_diagrams_of_the_seeds() {
        let a3 = dynkin(&cartan(&seed(SeedName::A3)).unwrap()).unwrap();
        assert_eq!(a3.edges(), &[(0, 1, 3), (1, 2, 3)]);

        let b3 = dynkin(&cartan(&seed(SeedName::B3)).unwrap()).unwrap();
        assert_eq!(b3.edges(), &[(0, 1, 3), (1, 2, 4)]);

        let h3 = dynkin(&cartan(&seed(SeedName::H3)).unwrap()).unwrap();
        assert_eq!(h3.edges(), &[(0, 1, 3), (1, 2, 5)]);
        assert!(h3.is_tree());
    }

    #[test]
    fn dynkin_rejects_unknown_bond_products() {
        let two = GoldenNum::from_int(2);
        let c = CartanMatrix::from_entries(vec![
            vec![two.clone(), g(-5, 2, 0, 1)],
            vec![GoldenNum::from_int(-1), two.clone()],
        ])
        .unwrap();
        assert!(matches!(dynkin(&c), Err(Error::UnknownBond(_))));
    }

    #[test]
    fn dot_output_is_deterministic_and_omits_simple_bond_labels() {
        let h3 = dynkin(&cartan(&seed(SeedName::H3)).unwrap()).unwrap();
        let dot = h3.to_dot();
        assert!(dot.contains("n1 -- n2;"));
        assert!(dot.contains("n2 -- n3 [label=5];"));
        assert_eq!(dot, h3.to_dot());
    }

    #[test]
    fn extraction_recovers_each_seed_cartan_up_to_permutation() {
        for name in [SeedName::A3, SeedName::B3, SeedName::H3] {
            let rs = close_default(&seed(name)).unwrap();
            let simple = extract_simple_roots(&rs).unwrap();
            assert_eq!(simple.len(), 3, "{}", name);
            let extracted = cartan(&simple).unwrap();
            let reference = cartan(&seed(name)).unwrap();
            assert!(
                extracted.permutation_equivalent(&reference),
                "{}: {:?} vs {:?}",
                name,
                extracted,
                reference
            );
        }
    }

    #[test]
    fn extraction_on_a_single_pair_returns_one_root() {
        let rs = close_default(&[iv([1, 0, 0])]).unwrap();
        let simple = extract_simple_roots(&rs).unwrap();
        assert_eq!(simple.len(), 1);
        assert!(simple[0] == iv([1, 0, 0]) || simple[0] == iv([-1, 0, 0]));
    }

    #[test]
    fn permutation_equivalence_distinguishes_b3_from_a3() {
        let a3 = cartan(&seed(SeedName::A3)).unwrap();
        let b3 = cartan(&seed(SeedName::B3)).unwrap();
        assert!(a3.permutation_equivalent(&a3));
        assert!(!a3.permutation_equivalent(&b3));
    }

    #[test]
    fn root_system_json_round_trips_and_is_sorted() {
        let rs = close_default(&seed(SeedName::B3)).unwrap();
        let json = serde_json::to_string(&rs).unwrap();
        let back: RootSystem = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rs);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn reflect_examples_and_errors() {
        let e1 = iv([1, 0, 0]);
        let e2 = iv([0, 1, 0]);
        assert_eq!(reflect(&e2, &e1).unwrap(), e1);
        assert_eq!(reflect(&e1, &e1).unwrap(), iv([-1, 0, 0]));
        let zero = GoldenVec::new(vec![GoldenNum::zero(); 3]);
        assert!(matches!(reflect(&zero, &e1), Err(Error::ZeroRoot)));
    }
}
