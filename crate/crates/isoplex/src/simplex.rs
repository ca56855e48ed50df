//! Antipodally symmetric simplicial fans covering Euclidean space.
//!
//! The unit sphere is triangulated by intersecting it with a fan of
//! full-dimensional simplicial cones. Every cone is spanned by `dim` integer
//! rays (*vertices*); the fan is closed under the antipodal map `x -> -x`, so
//! the triangulation descends to projective space. Refinement bisects a
//! spherical edge: a new integer ray near the spherical midpoint of the two
//! endpoints is inserted (keeping all later arithmetic exact) and every cone
//! containing the edge is split in two, on both sides of the sphere at once.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::arith::{kernel_vector, rank_of, rat_to_f64, solve_mat};

pub type VertexId = usize;
pub type ConeId = usize;

/// A fan of simplicial cones with integer rays, closed under `x -> -x`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    dim: usize,
    rays: Vec<Vec<BigInt>>,
    units: Vec<Vec<f64>>,
    antipode: Vec<VertexId>,
    /// `None` marks a cone removed by refinement; ids are never reused.
    cones: Vec<Option<Vec<VertexId>>>,
    cone_antipode: Vec<ConeId>,
    alive: usize,
}

/// What one refinement changed: the driver uses this to retest only faces
/// whose certificates may have been invalidated.
#[derive(Clone, Debug)]
pub struct RefineDelta {
    pub new_vertices: Vec<VertexId>,
    /// Removed cone ids with the vertex lists they had.
    pub removed: Vec<(ConeId, Vec<VertexId>)>,
    pub added: Vec<ConeId>,
}

impl RefineDelta {
    /// Faces whose test data changed: every face of a removed or added cone.
    /// A face not touched by the split keeps its cone neighbourhood and its
    /// restriction data, so its certificate remains valid.
    pub fn dirty_faces(&self, decomp: &Decomposition) -> BTreeSet<Vec<VertexId>> {
        let mut out = BTreeSet::new();
        for (_, vs) in &self.removed {
            for f in subsets(vs) {
                out.insert(f);
            }
        }
        for &c in &self.added {
            for f in subsets(decomp.cone(c)) {
                out.insert(f);
            }
        }
        out
    }
}

/// All nonempty subsets of a sorted vertex list, each sorted.
fn subsets(vs: &[VertexId]) -> Vec<Vec<VertexId>> {
    let k = vs.len();
    let mut out = Vec::with_capacity((1 << k) - 1);
    for mask in 1u32..(1 << k) {
        let f: Vec<VertexId> = (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| vs[i])
            .collect();
        out.push(f);
    }
    out
}

fn unit_of(ray: &[BigInt]) -> Vec<f64> {
    let m = ray.iter().map(|c| c.abs()).max().expect("nonempty ray");
    assert!(!m.is_zero(), "zero ray");
    let scaled: Vec<f64> = ray
        .iter()
        .map(|c| rat_to_f64(&BigRational::new(c.clone(), m.clone())))
        .collect();
    let norm = scaled.iter().map(|x| x * x).sum::<f64>().sqrt();
    scaled.into_iter().map(|x| x / norm).collect()
}

/// Integer ray near the spherical midpoint of two rays: each parent is
/// weighted by the floor integer length of the other (tracking the exact
/// unit-vector bisector `a/|a| + b/|b|`), and the gcd of the entries is
/// stripped. The plain sum `a + b` would not do: once the endpoint norms
/// diverge, the sum hugs the longer ray, so repeated bisection around a
/// short-ray vertex stops making angular progress and refinement stalls.
fn midpoint_ray(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let norm2 = |r: &[BigInt]| r.iter().map(|x| x * x).sum::<BigInt>();
    let weight_a = norm2(b).sqrt();
    let weight_b = norm2(a).sqrt();
    let mut w: Vec<BigInt> = a
        .iter()
        .zip(b)
        .map(|(x, y)| &weight_a * x + &weight_b * y)
        .collect();
    let g = w.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_one() {
        for c in &mut w {
            *c /= &g;
        }
    }
    w
}

#[derive(Debug, thiserror::Error)]
pub enum StructureError {
    #[error("ray of vertex {0} has wrong dimension")]
    RayDimension(VertexId),
    #[error("vertex {0} has no antipodal partner")]
    MissingAntipode(VertexId),
    #[error("two vertices share one ray")]
    DuplicateRay,
    #[error("cone {0} does not have exactly {1} distinct vertices")]
    ConeSize(ConeId, usize),
    #[error("cone {0} references vertex {1} which does not exist")]
    BadVertex(ConeId, VertexId),
    #[error("cone {0} has no antipodal cone")]
    MissingAntipodalCone(ConeId),
}

#[derive(Debug, thiserror::Error)]
pub enum ValidationError {
    #[error("cone {0} is not full-dimensional")]
    RankDeficient(ConeId),
    #[error("facet {0:?} borders {1} cones, expected exactly 2")]
    FacetPairing(Vec<VertexId>, usize),
    #[error("facet {0:?} does not separate its two cones")]
    NotSeparating(Vec<VertexId>),
    #[error("sampled direction {0:?} lies in no cone")]
    CoveringGap(Vec<f64>),
    #[error("sampled direction {0:?} lies strictly inside {1} cones")]
    Overlap(Vec<f64>, usize),
}

impl Decomposition {
    /// The fan over the cross-polytope: one simplicial cone per orthant.
    /// Vertex `2i` is `+e_i`, vertex `2i + 1` is `-e_i`.
    pub fn initial(dim: usize) -> Self {
        assert!(dim >= 2, "ambient dimension must be at least 2");
        assert!(dim <= 20, "ambient dimension unreasonably large");
        let mut rays = Vec::with_capacity(2 * dim);
        let mut antipode = Vec::with_capacity(2 * dim);
        for i in 0..dim {
            let mut plus = vec![BigInt::from(0); dim];
            plus[i] = BigInt::from(1);
            let mut minus = vec![BigInt::from(0); dim];
            minus[i] = BigInt::from(-1);
            rays.push(plus);
            rays.push(minus);
            antipode.push(2 * i + 1);
            antipode.push(2 * i);
        }
        let units = rays.iter().map(|r| unit_of(r)).collect();
        let ncones = 1usize << dim;
        let mut cones = Vec::with_capacity(ncones);
        let mut cone_antipode = Vec::with_capacity(ncones);
        for mask in 0..ncones {
            let vs: Vec<VertexId> = (0..dim).map(|i| 2 * i + (mask >> i & 1)).collect();
            cones.push(Some(vs));
            cone_antipode.push(ncones - 1 - mask);
        }
        Decomposition {
            dim,
            rays,
            units,
            antipode,
            cones,
            cone_antipode,
            alive: ncones,
        }
    }

    /// Rebuild a fan from raw rays and cone vertex lists, recovering the
    /// antipodal pairing. Geometric soundness is checked separately by
    /// [`validate`](Self::validate).
    pub fn from_parts(
        dim: usize,
        rays: Vec<Vec<BigInt>>,
        cone_lists: Vec<Vec<VertexId>>,
    ) -> Result<Self, StructureError> {
        let mut by_ray: HashMap<Vec<BigInt>, VertexId> = HashMap::new();
        for (v, r) in rays.iter().enumerate() {
            if r.len() != dim {
                return Err(StructureError::RayDimension(v));
            }
            if by_ray.insert(r.clone(), v).is_some() {
                return Err(StructureError::DuplicateRay);
            }
        }
        let mut antipode = Vec::with_capacity(rays.len());
        for (v, r) in rays.iter().enumerate() {
            let neg: Vec<BigInt> = r.iter().map(|c| -c).collect();
            match by_ray.get(&neg) {
                Some(&w) => antipode.push(w),
                None => return Err(StructureError::MissingAntipode(v)),
            }
        }
        let mut cones = Vec::with_capacity(cone_lists.len());
        for (c, mut vs) in cone_lists.into_iter().enumerate() {
            vs.sort_unstable();
            vs.dedup();
            if vs.len() != dim {
                return Err(StructureError::ConeSize(c, dim));
            }
            if let Some(&v) = vs.iter().find(|&&v| v >= rays.len()) {
                return Err(StructureError::BadVertex(c, v));
            }
            cones.push(Some(vs));
        }
        let mut by_list: HashMap<Vec<VertexId>, ConeId> = HashMap::new();
        for (c, vs) in cones.iter().enumerate() {
            by_list.insert(vs.clone().unwrap(), c);
        }
        let mut cone_antipode = Vec::with_capacity(cones.len());
        for (c, vs) in cones.iter().enumerate() {
            let mut anti: Vec<VertexId> =
                vs.as_ref().unwrap().iter().map(|&v| antipode[v]).collect();
            anti.sort_unstable();
            match by_list.get(&anti) {
                Some(&a) => cone_antipode.push(a),
                None => return Err(StructureError::MissingAntipodalCone(c)),
            }
        }
        let units = rays.iter().map(|r| unit_of(r)).collect();
        let alive = cones.len();
        Ok(Decomposition {
            dim,
            rays,
            units,
            antipode,
            cones,
            cone_antipode,
            alive,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_vertices(&self) -> usize {
        self.rays.len()
    }

    /// Number of live cones.
    pub fn num_cones(&self) -> usize {
        self.alive
    }

    pub fn ray(&self, v: VertexId) -> &[BigInt] {
        &self.rays[v]
    }

    /// Float unit vector along the ray of `v` (heuristics only).
    pub fn unit(&self, v: VertexId) -> &[f64] {
        &self.units[v]
    }

    pub fn antipode(&self, v: VertexId) -> VertexId {
        self.antipode[v]
    }

    pub fn cone(&self, c: ConeId) -> &[VertexId] {
        self.cones[c].as_deref().expect("live cone")
    }

    pub fn is_live(&self, c: ConeId) -> bool {
        c < self.cones.len() && self.cones[c].is_some()
    }

    pub fn cone_antipode(&self, c: ConeId) -> ConeId {
        assert!(self.is_live(c));
        self.cone_antipode[c]
    }

    pub fn cone_ids(&self) -> impl Iterator<Item = ConeId> + '_ {
        self.cones
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.as_ref().map(|_| i))
    }

    /// Live cones whose vertex set contains `face` (sorted ids).
    pub fn cofaces(&self, face: &[VertexId]) -> Vec<ConeId> {
        self.cone_ids()
            .filter(|&c| {
                let vs = self.cone(c);
                face.iter().all(|v| vs.binary_search(v).is_ok())
            })
            .collect()
    }

    /// Every face of the fan: deduplicated nonempty vertex subsets of live
    /// cones, of all dimensions.
    pub fn faces(&self) -> BTreeSet<Vec<VertexId>> {
        let mut out = BTreeSet::new();
        for c in self.cone_ids() {
            for f in subsets(self.cone(c)) {
                out.insert(f);
            }
        }
        out
    }

    /// Exact ray columns of a face, for composing polynomials with the chart
    /// of the spanned cone.
    pub fn rational_columns(&self, face: &[VertexId]) -> Vec<Vec<BigRational>> {
        face.iter()
            .map(|&v| {
                self.rays[v]
                    .iter()
                    .map(|c| BigRational::from_integer(c.clone()))
                    .collect()
            })
            .collect()
    }

    /// Float mirror of [`rational_columns`](Self::rational_columns)
    /// (correctly rounded per coordinate, not normalized).
    pub fn float_columns(&self, face: &[VertexId]) -> Vec<Vec<f64>> {
        face.iter()
            .map(|&v| {
                self.rays[v]
                    .iter()
                    .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
                    .collect()
            })
            .collect()
    }

    /// Spherical edge length proxy: Euclidean distance of the unit rays.
    pub fn edge_length(&self, a: VertexId, b: VertexId) -> f64 {
        self.units[a]
            .iter()
            .zip(&self.units[b])
            .map(|(x, y)| (x - y) * (x - y))
            .sum::<f64>()
            .sqrt()
    }

    /// Longest edge over all live cones.
    pub fn max_edge_length(&self) -> f64 {
        let mut best = 0.0f64;
        for c in self.cone_ids() {
            let vs = self.cone(c);
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    best = best.max(self.edge_length(vs[i], vs[j]));
                }
            }
        }
        best
    }

    /// Pick the edge to bisect for a face that failed its test: the farthest
    /// pair of unit rays among the face's vertices, falling back to the
    /// longest neighbouring-cone edge through the vertex when the face is a
    /// single vertex (only those edges shrink the star around it). Ties break
    /// on the smaller vertex id pair, keeping runs deterministic.
    pub fn choose_refinement_edge(&self, face: &[VertexId]) -> (VertexId, VertexId) {
        let pairs: Vec<(VertexId, VertexId)> = if face.len() >= 2 {
            let mut ps = Vec::new();
            for i in 0..face.len() {
                for j in i + 1..face.len() {
                    ps.push((face[i].min(face[j]), face[i].max(face[j])));
                }
            }
            ps
        } else {
            let v = face[0];
            let mut ps = BTreeSet::new();
            for c in self.cofaces(face) {
                for &u in self.cone(c) {
                    if u != v {
                        ps.insert((v.min(u), v.max(u)));
                    }
                }
            }
            ps.into_iter().collect()
        };
        let mut best = pairs[0];
        let mut best_len = f64::NEG_INFINITY;
        for &(a, b) in &pairs {
            let len = self.edge_length(a, b);
            if len > best_len + 1e-12 {
                best = (a, b);
                best_len = len;
            }
        }
        best
    }

    fn push_vertex(&mut self, ray: Vec<BigInt>) -> VertexId {
        let id = self.rays.len();
        self.units.push(unit_of(&ray));
        self.rays.push(ray);
        self.antipode.push(usize::MAX); // fixed up by caller
        id
    }

    fn push_cone(&mut self, mut vs: Vec<VertexId>) -> ConeId {
        vs.sort_unstable();
        let id = self.cones.len();
        self.cones.push(Some(vs));
        self.cone_antipode.push(usize::MAX); // fixed up by caller
        self.alive += 1;
        id
    }

    fn remove_cone(&mut self, c: ConeId) -> Vec<VertexId> {
        self.alive -= 1;
        self.cones[c].take().expect("live cone")
    }

    /// Bisect the edge `{a, b}` and, simultaneously, its antipodal edge.
    ///
    /// A new vertex near the spherical midpoint of the endpoint rays (and its
    /// antipode) is added; every cone containing the edge is replaced by the
    /// two cones in which one endpoint is swapped for the new vertex. The edge
    /// must be a face of at least one live cone.
    pub fn refine(&mut self, a: VertexId, b: VertexId) -> RefineDelta {
        let (a, b) = (a.min(b), a.max(b));
        assert_ne!(a, b);
        assert_ne!(self.antipode[a], b, "cannot bisect an antipodal pair");
        let cof = self.cofaces(&[a, b]);
        assert!(!cof.is_empty(), "edge {{{a}, {b}}} is not a face");
        let aa = self.antipode[a];
        let ab = self.antipode[b];
        let cof_anti: Vec<ConeId> = cof.iter().map(|&c| self.cone_antipode[c]).collect();

        let ray_w = midpoint_ray(&self.rays[a], &self.rays[b]);
        let ray_wa: Vec<BigInt> = ray_w.iter().map(|c| -c).collect();
        let w = self.push_vertex(ray_w);
        let wa = self.push_vertex(ray_wa);
        self.antipode[w] = wa;
        self.antipode[wa] = w;

        let mut delta = RefineDelta {
            new_vertices: vec![w, wa],
            removed: Vec::new(),
            added: Vec::new(),
        };
        // (old cone, replaced vertex) -> new cone, to wire antipodal pairs
        let mut made: BTreeMap<(ConeId, VertexId), ConeId> = BTreeMap::new();
        let plan: Vec<(ConeId, VertexId)> = cof
            .iter()
            .map(|&c| (c, w))
            .chain(cof_anti.iter().map(|&c| (c, wa)))
            .collect();
        for (old, mid) in plan {
            let (lo, hi) = if mid == w {
                (a, b)
            } else {
                (aa.min(ab), aa.max(ab))
            };
            let vs = self.remove_cone(old);
            for drop in [lo, hi] {
                let new_vs: Vec<VertexId> = vs
                    .iter()
                    .map(|&v| if v == drop { mid } else { v })
                    .collect();
                let id = self.push_cone(new_vs);
                made.insert((old, drop), id);
                delta.added.push(id);
            }
            delta.removed.push((old, vs));
        }
        for (&c, &ca) in cof.iter().zip(&cof_anti) {
            for (drop, drop_anti) in [(a, aa), (b, ab)] {
                let n1 = made[&(c, drop)];
                let n2 = made[&(ca, drop_anti)];
                self.cone_antipode[n1] = n2;
                self.cone_antipode[n2] = n1;
            }
        }
        delta
    }

    /// Exact structural soundness check: every cone full-dimensional, every
    /// facet shared by exactly two cones on opposite sides of its hyperplane,
    /// and randomly sampled directions covered by exactly one cone interior.
    pub fn validate<R: Rng>(&self, rng: &mut R, samples: usize) -> Result<(), ValidationError> {
        for c in self.cone_ids() {
            let mat = self.rational_columns(self.cone(c));
            if rank_of(&mat) != self.dim {
                return Err(ValidationError::RankDeficient(c));
            }
        }
        // facet -> (cone, apex vertex dropped to form the facet)
        let mut facets: BTreeMap<Vec<VertexId>, Vec<(ConeId, VertexId)>> = BTreeMap::new();
        for c in self.cone_ids() {
            let vs = self.cone(c);
            for drop in 0..vs.len() {
                let f: Vec<VertexId> = vs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != drop)
                    .map(|(_, &v)| v)
                    .collect();
                facets.entry(f).or_default().push((c, vs[drop]));
            }
        }
        for (f, touching) in &facets {
            if touching.len() != 2 {
                return Err(ValidationError::FacetPairing(f.clone(), touching.len()));
            }
            let rows: Vec<Vec<BigRational>> = self.rational_columns(f);
            let h = match kernel_vector(&rows) {
                Some(h) => h,
                None => return Err(ValidationError::NotSeparating(f.clone())),
            };
            let side = |v: VertexId| -> BigRational {
                self.rays[v]
                    .iter()
                    .zip(&h)
                    .map(|(c, hc)| BigRational::from_integer(c.clone()) * hc)
                    .fold(BigRational::zero(), |x, y| x + y)
            };
            let s1 = side(touching[0].1);
            let s2 = side(touching[1].1);
            if s1.is_zero() || s2.is_zero() || s1.is_positive() == s2.is_positive() {
                return Err(ValidationError::NotSeparating(f.clone()));
            }
        }
        for _ in 0..samples {
            let x: Vec<f64> = (0..self.dim).map(|_| StandardNormal.sample(rng)).collect();
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            if norm < 1e-6 {
                continue;
            }
            let xr: Vec<BigRational> = x
                .iter()
                .map(|&v| crate::arith::f64_to_rat(v / norm))
                .collect();
            let mut strict = 0usize;
            let mut boundary = 0usize;
            for c in self.cone_ids() {
                let cols = self.rational_columns(self.cone(c));
                let rows: Vec<Vec<BigRational>> = (0..self.dim)
                    .map(|r| cols.iter().map(|col| col[r].clone()).collect())
                    .collect();
                let rhs: Vec<Vec<BigRational>> = xr.iter().map(|v| vec![v.clone()]).collect();
                if let Some(lam) = solve_mat(&rows, &rhs) {
                    if lam.iter().all(|l| l[0].is_positive()) {
                        strict += 1;
                    } else if lam.iter().all(|l| !l[0].is_negative()) {
                        boundary += 1;
                    }
                }
            }
            if strict > 1 {
                return Err(ValidationError::Overlap(x, strict));
            }
            if strict == 0 && boundary == 0 {
                return Err(ValidationError::CoveringGap(x));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn initial_counts() {
        // (ambient dim, vertices, cones, total deduped faces)
        for (dim, nv, nc, nf) in [(2, 4, 4, 8), (3, 6, 8, 26), (4, 8, 16, 80)] {
            let d = Decomposition::initial(dim);
            assert_eq!(d.num_vertices(), nv);
            assert_eq!(d.num_cones(), nc);
            assert_eq!(d.faces().len(), nf);
        }
    }

    #[test]
    fn initial_validates() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for dim in 2..=4 {
            Decomposition::initial(dim).validate(&mut rng, 8).unwrap();
        }
    }

    #[test]
    fn square_refinement() {
        let mut d = Decomposition::initial(2);
        // bisect the edge {+e0, +e1}
        let delta = d.refine(0, 2);
        assert_eq!(delta.new_vertices, vec![4, 5]);
        assert_eq!(d.ray(4), &[BigInt::from(1), BigInt::from(1)]);
        assert_eq!(d.ray(5), &[BigInt::from(-1), BigInt::from(-1)]);
        assert_eq!(d.antipode(4), 5);
        assert_eq!(d.num_vertices(), 6);
        assert_eq!(d.num_cones(), 6);
        assert_eq!(delta.removed.len(), 2);
        assert_eq!(delta.added.len(), 4);
        // 6 vertices + 6 edges
        assert_eq!(d.faces().len(), 12);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        d.validate(&mut rng, 16).unwrap();
    }

    #[test]
    fn refinement_keeps_antipodal_pairing() {
        let mut d = Decomposition::initial(3);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..12 {
            let faces: Vec<Vec<VertexId>> =
                d.faces().into_iter().filter(|f| f.len() == 2).collect();
            let pick = faces[rng.gen_range(0..faces.len())].clone();
            d.refine(pick[0], pick[1]);
            for v in 0..d.num_vertices() {
                assert_eq!(d.antipode(d.antipode(v)), v);
                let neg: Vec<BigInt> = d.ray(v).iter().map(|c| -c).collect();
                assert_eq!(d.ray(d.antipode(v)), &neg[..]);
            }
            for c in d.cone_ids().collect::<Vec<_>>() {
                let ca = d.cone_antipode(c);
                assert_eq!(d.cone_antipode(ca), c);
                let mut anti: Vec<VertexId> = d.cone(c).iter().map(|&v| d.antipode(v)).collect();
                anti.sort_unstable();
                assert_eq!(d.cone(ca), &anti[..]);
            }
        }
        d.validate(&mut rng, 16).unwrap();
    }

    #[test]
    fn cone_growth_per_refinement() {
        // bisecting an edge of the octahedral fan splits 2 cones per side
        let mut d = Decomposition::initial(3);
        let before = d.num_cones();
        d.refine(0, 2);
        assert_eq!(d.num_cones(), before + 4);
    }

    #[test]
    fn choose_edge_breaks_ties_deterministically() {
        let d = Decomposition::initial(3);
        // all edges of a cone have equal length; the smallest id pair wins
        assert_eq!(d.choose_refinement_edge(&[0, 2, 4]), (0, 2));
        // single vertex: longest edge among neighbouring cones (all equal)
        assert_eq!(d.choose_refinement_edge(&[0]), (0, 2));
    }

    #[test]
    fn choose_edge_prefers_longest() {
        let mut d = Decomposition::initial(2);
        d.refine(0, 2);
        // face {0, 4} is half as long as {0, 3}; a failed test on cone {0, 4}
        // must still pick its own (shorter) edge, but the vertex face {0}
        // looks at all cofaces and picks the longest
        assert_eq!(d.choose_refinement_edge(&[0, 4]), (0, 4));
        assert_eq!(d.choose_refinement_edge(&[0]), (0, 3));
    }

    #[test]
    fn round_trip_through_parts() {
        let mut d = Decomposition::initial(3);
        d.refine(0, 2);
        d.refine(2, 4);
        let rays = (0..d.num_vertices()).map(|v| d.ray(v).to_vec()).collect();
        let cones = d.cone_ids().map(|c| d.cone(c).to_vec()).collect();
        let r = Decomposition::from_parts(3, rays, cones).unwrap();
        assert_eq!(r.num_vertices(), d.num_vertices());
        assert_eq!(r.num_cones(), d.num_cones());
        assert_eq!(r.faces(), d.faces());
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        r.validate(&mut rng, 16).unwrap();
    }

    #[test]
    fn from_parts_rejects_broken_structures() {
        let ray = |xs: &[i64]| -> Vec<BigInt> { xs.iter().map(|&x| BigInt::from(x)).collect() };
        // missing antipode
        let r = Decomposition::from_parts(2, vec![ray(&[1, 0]), ray(&[0, 1])], vec![vec![0, 1]]);
        assert!(matches!(r, Err(StructureError::MissingAntipode(_))));
        // degenerate cone
        let r = Decomposition::from_parts(
            2,
            vec![ray(&[1, 0]), ray(&[-1, 0]), ray(&[0, 1]), ray(&[0, -1])],
            vec![vec![0, 0], vec![1, 1]],
        );
        assert!(matches!(r, Err(StructureError::ConeSize(0, 2))));
    }

    #[test]
    fn validate_flags_rank_deficiency_and_gaps() {
        let ray = |xs: &[i64]| -> Vec<BigInt> { xs.iter().map(|&x| BigInt::from(x)).collect() };
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        // a cone spanned by a vertex and its antipode is flat
        let d = Decomposition::from_parts(
            2,
            vec![ray(&[1, 0]), ray(&[-1, 0]), ray(&[0, 1]), ray(&[0, -1])],
            vec![vec![0, 1], vec![2, 3]],
        )
        .unwrap();
        assert!(matches!(
            d.validate(&mut rng, 4),
            Err(ValidationError::RankDeficient(_))
        ));
        // dropping a cone pair leaves unpaired facets
        let full = Decomposition::initial(2);
        let rays = (0..4).map(|v| full.ray(v).to_vec()).collect();
        let d = Decomposition::from_parts(2, rays, vec![vec![0, 2], vec![1, 3]]).unwrap();
        match d.validate(&mut rng, 4) {
            Err(ValidationError::FacetPairing(_, 1)) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn refinement_is_deterministic() {
        let run = || {
            let mut d = Decomposition::initial(3);
            d.refine(0, 2);
            d.refine(4, 6);
            d.refine(0, 6);
            let vs: Vec<Vec<BigInt>> = (0..d.num_vertices()).map(|v| d.ray(v).to_vec()).collect();
            let cs: Vec<Vec<VertexId>> = d.cone_ids().map(|c| d.cone(c).to_vec()).collect();
            (vs, cs)
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn dirty_faces_cover_the_split_region() {
        let mut d = Decomposition::initial(2);
        let delta = d.refine(0, 2);
        let dirty = delta.dirty_faces(&d);
        // old cones {0,2} and {1,3}: faces {0},{2},{0,2},{1},{3},{1,3};
        // new cones {0,4},{2,4},{1,5},{3,5} add {4},{5} and 4 edges
        assert!(dirty.contains(&vec![0, 2]));
        assert!(dirty.contains(&vec![0, 4]));
        assert!(dirty.contains(&vec![4]));
        assert!(!dirty.contains(&vec![0, 3]));
        // 6 vertices and 6 edges touch the two split cone pairs
        assert_eq!(dirty.len(), 12);
    }

    #[test]
    fn max_edge_shrinks_under_refinement() {
        let mut d = Decomposition::initial(2);
        let l0 = d.max_edge_length();
        for _ in 0..3 {
            let faces: Vec<Vec<VertexId>> =
                d.faces().into_iter().filter(|f| f.len() == 2).collect();
            let longest = faces
                .iter()
                .max_by(|x, y| {
                    d.edge_length(x[0], x[1])
                        .partial_cmp(&d.edge_length(y[0], y[1]))
                        .unwrap()
                })
                .unwrap()
                .clone();
            d.refine(longest[0], longest[1]);
        }
        assert!(d.max_edge_length() < l0);
    }
}
