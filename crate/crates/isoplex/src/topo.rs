//! Topology of the piecewise-linear variety cut out by the interpolant.
//!
//! Inside one cone with rays `R` and interpolant values `T` (one row per
//! equation, one column per ray), the zero set in barycentric coordinates is
//! the polytope `{ lam >= 0, sum lam = 1, T lam = 0 }`. Its vertices are
//! found exactly: a support set `K` of at most `m + 1` coordinates whose
//! lifted columns are independent and whose unique solution is strictly
//! positive. Faces are the subsets obtained by zeroing coordinates, and
//! pieces from neighbouring cones glue along shared fan faces, where both
//! sides interpolate the same values over the same rays and therefore agree
//! exactly. All of this is rational arithmetic; no tolerance enters.
//!
//! The resulting cell complex is antipodally symmetric and no cell meets its
//! own mirror, so the quotient (the projective picture) is again a regular
//! cell complex: cells are *identified in pairs*, and two distinct quotient
//! cells may well share their whole vertex set (a projective line becomes two
//! vertices joined by two distinct edges). Connected components come from a
//! union-find over face incidences, and Z/2 Betti numbers from the order
//! complex of the face poset — the barycentric subdivision — reduced over
//! GF(2). The alternating cell count must match the alternating Betti sum,
//! and the checker insists on it.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{rank_of, rat_to_f64};
use crate::minnorm::solve_full_column_rank;
use crate::simplex::{Decomposition, VertexId};

/// One cell of the piecewise-linear variety, a polytope face of some cone's
/// zero set.
#[derive(Clone, Debug)]
pub struct Cell {
    /// Affine dimension.
    pub dim: usize,
    /// Global vertex ids, sorted.
    pub verts: Vec<usize>,
    /// Vertex ids of the smallest fan face containing the cell, sorted.
    pub carrier: Vec<VertexId>,
}

/// The glued cell complex on the sphere, with its antipodal pairing.
#[derive(Clone, Debug)]
pub struct Complex {
    pub ambient: usize,
    /// Exact coordinates of the global vertices (not normalized).
    pub coords: Vec<Vec<BigRational>>,
    pub cells: Vec<Cell>,
    pub vertex_antipode: Vec<usize>,
    pub cell_antipode: Vec<usize>,
}

/// Component and homology summary, on the sphere and in the quotient.
#[derive(Clone, Debug, PartialEq)]
pub struct TopologyReport {
    /// Cell counts per dimension before the antipodal identification.
    pub sphere_cells: Vec<usize>,
    pub sphere_components: usize,
    /// Cell counts per dimension in the quotient (exactly half the above).
    pub cells: Vec<usize>,
    pub components: usize,
    /// Z/2 Betti numbers of the quotient, summed over components.
    pub betti: Vec<usize>,
    /// Z/2 Betti numbers per component.
    pub component_betti: Vec<Vec<usize>>,
    /// Alternating cell count of the quotient; always equals the alternating
    /// Betti sum.
    pub euler: i64,
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != n - k + i {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn union_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            out.push(b[j]);
            j += 1;
        } else {
            out.push(a[i]);
            i += 1;
            j += 1;
        }
    }
    out
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

fn affine_rank(points: &[&Vec<BigRational>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = points[0];
    let rows: Vec<Vec<BigRational>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base.iter()).map(|(a, b)| a - b).collect())
        .collect();
    rank_of(&rows)
}

/// Extract the glued cell complex of the interpolant's zero set.
///
/// `tilde` holds the exact interpolant values, one row per fan vertex.
pub fn build_complex(decomp: &Decomposition, tilde: &[Vec<BigRational>]) -> Complex {
    let dim = decomp.dim();
    let ambient = dim;
    let m = tilde.first().map(Vec::len).unwrap_or(0);
    let mut coord_ids: BTreeMap<Vec<BigRational>, usize> = BTreeMap::new();
    let mut coords: Vec<Vec<BigRational>> = Vec::new();
    let mut cell_ids: BTreeMap<(Vec<VertexId>, Vec<usize>), usize> = BTreeMap::new();
    let mut cells: Vec<Cell> = Vec::new();

    let mut rhs = vec![BigRational::zero(); m];
    rhs.push(BigRational::one());

    for c in decomp.cone_ids() {
        let vs = decomp.cone(c).to_vec();
        let lifted_col = |l: usize| -> Vec<BigRational> {
            let mut col = tilde[vs[l]].clone();
            col.push(BigRational::one());
            col
        };
        // vertices of the zero polytope: strictly positive basic solutions
        let mut supports: Vec<Vec<usize>> = Vec::new();
        let mut gids: Vec<usize> = Vec::new();
        for size in 1..=m.min(dim - 1) + 1 {
            for k_set in combinations(dim, size) {
                let cols: Vec<Vec<BigRational>> = k_set.iter().map(|&l| lifted_col(l)).collect();
                let lam = match solve_full_column_rank(&cols, &rhs) {
                    Some(lam) => lam,
                    None => continue,
                };
                if !lam.iter().all(Signed::is_positive) {
                    continue;
                }
                let mut x = vec![BigRational::zero(); ambient];
                for (t, &l) in k_set.iter().enumerate() {
                    for (xi, ri) in x.iter_mut().zip(decomp.ray(vs[l]).iter()) {
                        *xi += &lam[t] * BigRational::from_integer(ri.clone());
                    }
                }
                let next = coords.len();
                let gid = *coord_ids.entry(x.clone()).or_insert_with(|| {
                    coords.push(x);
                    next
                });
                supports.push(k_set);
                gids.push(gid);
            }
        }
        if supports.is_empty() {
            continue;
        }
        // faces: zero sets of coordinate subsets, generated by support unions
        let mut closure: BTreeSet<Vec<usize>> = supports.iter().cloned().collect();
        loop {
            let mut fresh: Vec<Vec<usize>> = Vec::new();
            for a in &closure {
                for g in &supports {
                    let u = union_sorted(a, g);
                    if !closure.contains(&u) {
                        fresh.push(u);
                    }
                }
            }
            if fresh.is_empty() {
                break;
            }
            closure.extend(fresh);
        }
        for j_set in &closure {
            let members: Vec<usize> = (0..supports.len())
                .filter(|&i| is_subset(&supports[i], j_set))
                .collect();
            let mut verts: Vec<usize> = members.iter().map(|&i| gids[i]).collect();
            verts.sort_unstable();
            verts.dedup();
            let carrier_set: Vec<usize> = members
                .iter()
                .fold(Vec::new(), |acc, &i| union_sorted(&acc, &supports[i]));
            let mut carrier: Vec<VertexId> = carrier_set.iter().map(|&l| vs[l]).collect();
            carrier.sort_unstable();
            let pts: Vec<&Vec<BigRational>> = verts.iter().map(|&g| &coords[g]).collect();
            let cdim = affine_rank(&pts);
            let key = (carrier.clone(), verts.clone());
            if let Some(&old) = cell_ids.get(&key) {
                debug_assert_eq!(cells[old].dim, cdim);
                continue;
            }
            cell_ids.insert(key, cells.len());
            cells.push(Cell {
                dim: cdim,
                verts,
                carrier,
            });
        }
    }

    let vertex_antipode: Vec<usize> = coords
        .iter()
        .map(|x| {
            let neg: Vec<BigRational> = x.iter().map(|c| -c).collect();
            *coord_ids
                .get(&neg)
                .expect("antipodal image of every variety vertex is present")
        })
        .collect();
    let cell_antipode: Vec<usize> = cells
        .iter()
        .map(|cell| {
            let mut carrier: Vec<VertexId> =
                cell.carrier.iter().map(|&v| decomp.antipode(v)).collect();
            carrier.sort_unstable();
            let mut verts: Vec<usize> = cell.verts.iter().map(|&g| vertex_antipode[g]).collect();
            verts.sort_unstable();
            *cell_ids
                .get(&(carrier, verts))
                .expect("antipodal image of every cell is present")
        })
        .collect();
    for (i, &a) in cell_antipode.iter().enumerate() {
        assert_ne!(i, a, "no cell may be its own antipodal image");
    }
    Complex {
        ambient,
        coords,
        cells,
        vertex_antipode,
        cell_antipode,
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// GF(2) rank of a matrix given as rows of column indices.
fn gf2_rank(rows: &[Vec<usize>], ncols: usize) -> usize {
    let words = ncols.div_ceil(64);
    let mut pivot_by_lead: HashMap<usize, Vec<u64>> = HashMap::new();
    let mut rank = 0;
    for cols in rows {
        let mut row = vec![0u64; words];
        for &c in cols {
            row[c / 64] ^= 1 << (c % 64);
        }
        while let Some(lead) = row
            .iter()
            .enumerate()
            .find_map(|(i, w)| (*w != 0).then(|| i * 64 + w.trailing_zeros() as usize))
        {
            match pivot_by_lead.get(&lead) {
                Some(p) => {
                    for (r, w) in row.iter_mut().zip(p) {
                        *r ^= w;
                    }
                }
                None => {
                    pivot_by_lead.insert(lead, row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Z/2 Betti numbers of one poset component via its order complex.
///
/// `up[a]` lists the elements strictly above `a`; chains in the poset are the
/// simplices of the barycentric subdivision of the cell complex.
fn component_betti(elems: &[usize], up: &HashMap<usize, Vec<usize>>, max_dim: usize) -> Vec<usize> {
    // enumerate chains by length (index k holds the chains of k + 1 elements)
    let mut chains: Vec<Vec<Vec<usize>>> = vec![Vec::new(); max_dim + 1];
    fn extend(
        chain: &mut Vec<usize>,
        up: &HashMap<usize, Vec<usize>>,
        chains: &mut Vec<Vec<Vec<usize>>>,
    ) {
        let k = chain.len() - 1;
        if k < chains.len() {
            chains[k].push(chain.clone());
        }
        let last = *chain.last().unwrap();
        if let Some(bigger) = up.get(&last) {
            for &b in bigger {
                chain.push(b);
                extend(chain, up, chains);
                chain.pop();
            }
        }
    }
    for &e in elems {
        let mut chain = vec![e];
        extend(&mut chain, up, &mut chains);
    }
    // boundary ranks over GF(2)
    let mut index: Vec<HashMap<&[usize], usize>> = Vec::with_capacity(max_dim + 1);
    for level in &chains {
        let mut map = HashMap::new();
        for (i, ch) in level.iter().enumerate() {
            map.insert(ch.as_slice(), i);
        }
        index.push(map);
    }
    let mut ranks = vec![0usize; max_dim + 2];
    for k in 1..=max_dim {
        if chains[k].is_empty() {
            continue;
        }
        let rows: Vec<Vec<usize>> = chains[k]
            .iter()
            .map(|ch| {
                (0..ch.len())
                    .map(|drop| {
                        let mut face = ch.clone();
                        face.remove(drop);
                        index[k - 1][face.as_slice()]
                    })
                    .collect()
            })
            .collect();
        ranks[k] = gf2_rank(&rows, chains[k - 1].len());
    }
    (0..=max_dim)
        .map(|k| chains[k].len() - ranks[k] - ranks[k + 1])
        .collect()
}

/// Components, Betti numbers, and the Euler cross-check.
pub fn analyze(cx: &Complex) -> TopologyReport {
    let n = cx.cells.len();
    if n == 0 {
        return TopologyReport {
            sphere_cells: Vec::new(),
            sphere_components: 0,
            cells: Vec::new(),
            components: 0,
            betti: Vec::new(),
            component_betti: Vec::new(),
            euler: 0,
        };
    }
    let max_dim = cx.cells.iter().map(|c| c.dim).max().unwrap();
    let mut sphere_cells = vec![0usize; max_dim + 1];
    for c in &cx.cells {
        sphere_cells[c.dim] += 1;
    }
    // components on the sphere: vertex-set containment is face containment
    let mut uf = UnionFind::new(n);
    for a in 0..n {
        for b in 0..n {
            if cx.cells[a].dim < cx.cells[b].dim
                && is_subset(&cx.cells[a].verts, &cx.cells[b].verts)
            {
                uf.union(a, b);
            }
        }
    }
    let sphere_components = (0..n).filter(|&i| uf.find(i) == i).count();

    // quotient: cells in antipodal pairs, represented by the smaller id
    let reps: Vec<usize> = (0..n).filter(|&i| i <= cx.cell_antipode[i]).collect();
    let no = reps.len();
    let mut cells_quot = vec![0usize; max_dim + 1];
    for &r in &reps {
        cells_quot[cx.cells[r].dim] += 1;
    }
    for d in 0..=max_dim {
        assert_eq!(
            2 * cells_quot[d],
            sphere_cells[d],
            "antipodal pairing must halve every cell count"
        );
    }
    // order relation between orbit representatives: compare either lift
    let less = |a: usize, b: usize| -> bool {
        cx.cells[a].dim < cx.cells[b].dim
            && (is_subset(&cx.cells[a].verts, &cx.cells[b].verts)
                || is_subset(&cx.cells[a].verts, &cx.cells[cx.cell_antipode[b]].verts))
    };
    let mut up: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut quf = UnionFind::new(no);
    for ia in 0..no {
        for ib in 0..no {
            if ia != ib && less(reps[ia], reps[ib]) {
                up.entry(ia).or_default().push(ib);
                quf.union(ia, ib);
            }
        }
    }
    let mut comp_elems: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..no {
        let root = quf.find(i);
        comp_elems.entry(root).or_default().push(i);
    }
    let components = comp_elems.len();
    let mut component_betti = Vec::with_capacity(components);
    let mut betti = vec![0usize; max_dim + 1];
    for elems in comp_elems.values() {
        let b = component_betti_checked(cx, &reps, elems, &up, max_dim);
        for (t, x) in betti.iter_mut().zip(&b) {
            *t += x;
        }
        component_betti.push(b);
    }
    let euler: i64 = cells_quot
        .iter()
        .enumerate()
        .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum();
    let euler_from_betti: i64 = betti
        .iter()
        .enumerate()
        .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum();
    assert_eq!(
        euler, euler_from_betti,
        "alternating cell count must equal the alternating Betti sum"
    );
    TopologyReport {
        sphere_cells,
        sphere_components,
        cells: cells_quot,
        components,
        betti,
        component_betti,
        euler,
    }
}

fn component_betti_checked(
    cx: &Complex,
    reps: &[usize],
    elems: &[usize],
    up: &HashMap<usize, Vec<usize>>,
    max_dim: usize,
) -> Vec<usize> {
    let b = component_betti(elems, up, max_dim);
    let chi_cells: i64 = elems
        .iter()
        .map(|&i| {
            let d = cx.cells[reps[i]].dim;
            if d.is_multiple_of(2) {
                1
            } else {
                -1
            }
        })
        .sum();
    let chi_betti: i64 = b
        .iter()
        .enumerate()
        .map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum();
    assert_eq!(chi_cells, chi_betti, "per-component Euler mismatch");
    b
}

/// Unit-sphere coordinates of the global vertices, for display and export.
pub fn unit_coords(cx: &Complex) -> Vec<Vec<f64>> {
    cx.coords
        .iter()
        .map(|x| {
            let f: Vec<f64> = x.iter().map(rat_to_f64).collect();
            let norm = f.iter().map(|v| v * v).sum::<f64>().sqrt();
            f.iter().map(|v| v / norm).collect()
        })
        .collect()
}

/// Geometry export: an OFF file (nOFF outside three dimensions) carrying the
/// vertices and polygon cells, plus a companion edge list when the complex
/// has one-dimensional cells.
///
/// Vertices are radially projected onto the unit sphere. Cells of dimension
/// three or more are not representable in OFF and are omitted.
pub fn export_off(cx: &Complex) -> (String, Option<String>) {
    let units = unit_coords(cx);
    let edges: Vec<&Cell> = cx.cells.iter().filter(|c| c.dim == 1).collect();
    let polys: Vec<&Cell> = cx.cells.iter().filter(|c| c.dim == 2).collect();
    let mut off = String::new();
    if cx.ambient == 3 {
        off.push_str("OFF\n");
    } else {
        off.push_str("nOFF\n");
        off.push_str(&format!("{}\n", cx.ambient));
    }
    off.push_str(&format!(
        "{} {} {}\n",
        units.len(),
        polys.len(),
        edges.len()
    ));
    for u in &units {
        let words: Vec<String> = u.iter().map(|v| format!("{v:.17}")).collect();
        off.push_str(&words.join(" "));
        off.push('\n');
    }
    for p in &polys {
        let cycle = polygon_cycle(p, &edges);
        let mut line = format!("{}", cycle.len());
        for v in cycle {
            line.push_str(&format!(" {v}"));
        }
        off.push_str(&line);
        off.push('\n');
    }
    let edge_list = if edges.is_empty() {
        None
    } else {
        let mut text = String::new();
        for e in &edges {
            text.push_str(&format!("{} {}\n", e.verts[0], e.verts[1]));
        }
        Some(text)
    };
    (off, edge_list)
}

/// Order the vertices of a polygon cell by walking its boundary edges.
fn polygon_cycle(cell: &Cell, edges: &[&Cell]) -> Vec<usize> {
    let boundary: Vec<&&Cell> = edges
        .iter()
        .filter(|e| is_subset(&e.verts, &cell.verts))
        .collect();
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for e in &boundary {
        adj.entry(e.verts[0]).or_default().push(e.verts[1]);
        adj.entry(e.verts[1]).or_default().push(e.verts[0]);
    }
    let start = cell.verts[0];
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let ns = &adj[&cur];
        assert_eq!(ns.len(), 2, "polygon vertex must lie on exactly two edges");
        let next = if ns[0] != prev { ns[0] } else { ns[1] };
        if next == start {
            break;
        }
        cycle.push(next);
        prev = cur;
        cur = next;
    }
    assert_eq!(cycle.len(), cell.verts.len(), "boundary walk must close up");
    cycle
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::driver::{solve, SolveParams, SolveStatus};
    use crate::parse::parse_system;

    fn complex_for(text: &str) -> Complex {
        let sys = parse_system(text).unwrap();
        let res = solve(&sys, &SolveParams::default());
        assert!(matches!(res.status, SolveStatus::Certified));
        build_complex(&res.decomp, res.tilde.exact_rows())
    }

    #[test]
    fn conic_gives_one_projective_circle() {
        let cx = complex_for("x0^2 + x1^2 - x2^2\n");
        let report = analyze(&cx);
        assert_eq!(report.sphere_cells, vec![8, 8]);
        assert_eq!(report.sphere_components, 2);
        assert_eq!(report.cells, vec![4, 4]);
        assert_eq!(report.components, 1);
        assert_eq!(report.betti, vec![1, 1]);
        assert_eq!(report.euler, 0);
        assert_eq!(report.component_betti, vec![vec![1, 1]]);
    }

    #[test]
    fn projective_line_needs_parallel_quotient_edges() {
        // the zero set passes through the rays +-e2, and the antipodal map
        // preserves each great-circle component: the quotient is two vertices
        // joined by two distinct edges, still one circle
        let cx = complex_for("x0 + x1 + 0 x2\n");
        let report = analyze(&cx);
        assert_eq!(report.sphere_cells, vec![4, 4]);
        assert_eq!(report.sphere_components, 1);
        assert_eq!(report.cells, vec![2, 2]);
        assert_eq!(report.components, 1);
        assert_eq!(report.betti, vec![1, 1]);
    }

    #[test]
    fn empty_variety_reports_nothing() {
        let cx = complex_for("x0^2 + x1^2 + x2^2\n");
        assert!(cx.cells.is_empty());
        let report = analyze(&cx);
        assert_eq!(report.components, 0);
        assert_eq!(report.sphere_components, 0);
        assert!(report.betti.is_empty());
        assert_eq!(report.euler, 0);
    }

    #[test]
    fn quadric_surface_is_an_octahedral_sphere() {
        // on the 3-sphere the zero set is two octahedra (chi = 2 each); the
        // antipodal map swaps them, leaving one sphere in the quotient
        let cx = complex_for("x0^2 + x1^2 + x2^2 - x3^2\n");
        let report = analyze(&cx);
        assert_eq!(report.sphere_cells, vec![12, 24, 16]);
        assert_eq!(report.sphere_components, 2);
        assert_eq!(report.cells, vec![6, 12, 8]);
        assert_eq!(report.components, 1);
        assert_eq!(report.betti, vec![1, 0, 1]);
        assert_eq!(report.euler, 2);
    }

    #[test]
    fn two_concentric_circles() {
        // (x^2 + y^2 - t^2)(x^2 + y^2 - t^2/4) expanded
        let cx =
            complex_for("x0^4 + 2 x0^2 x1^2 + x1^4 - 5/4 x0^2 x2^2 - 5/4 x1^2 x2^2 + 1/4 x2^4\n");
        let report = analyze(&cx);
        assert_eq!(report.sphere_components, 4);
        assert_eq!(report.components, 2);
        assert_eq!(report.betti, vec![2, 2]);
        assert_eq!(report.euler, 0);
        assert_eq!(report.component_betti, vec![vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn curve_in_three_space() {
        // a conic cylinder cut by a hyperplane: one projective circle
        let cx = complex_for("x0^2 + x1^2 - x3^2\nx2\n");
        let report = analyze(&cx);
        assert_eq!(report.components, 1);
        assert_eq!(report.betti, vec![1, 1]);
        assert_eq!(report.euler, 0);
    }

    #[test]
    fn antipodal_pairing_is_free() {
        let cx = complex_for("x0^2 + x1^2 - x2^2\n");
        for (i, &a) in cx.cell_antipode.iter().enumerate() {
            assert_ne!(i, a);
            assert_eq!(cx.cell_antipode[a], i);
        }
        for (v, &a) in cx.vertex_antipode.iter().enumerate() {
            assert_ne!(v, a);
            assert_eq!(cx.vertex_antipode[a], v);
        }
    }

    #[test]
    fn off_export_of_a_curve() {
        let cx = complex_for("x0^2 + x1^2 - x2^2\n");
        let (off, edges) = export_off(&cx);
        let mut lines = off.lines();
        assert_eq!(lines.next(), Some("OFF"));
        assert_eq!(lines.next(), Some("8 0 8"));
        for line in lines {
            let coords: Vec<f64> = line
                .split_whitespace()
                .map(|w| w.parse().unwrap())
                .collect();
            assert_eq!(coords.len(), 3);
            let norm: f64 = coords.iter().map(|v| v * v).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() < 1e-12);
        }
        let edges = edges.unwrap();
        assert_eq!(edges.lines().count(), 8);
        for line in edges.lines() {
            let ids: Vec<usize> = line
                .split_whitespace()
                .map(|w| w.parse().unwrap())
                .collect();
            assert_eq!(ids.len(), 2);
            assert!(ids[0] < 8 && ids[1] < 8);
        }
    }

    #[test]
    fn off_export_of_a_surface_has_closed_polygons() {
        let cx = complex_for("x0^2 + x1^2 + x2^2 - x3^2\n");
        let (off, edges) = export_off(&cx);
        let mut lines = off.lines();
        assert_eq!(lines.next(), Some("nOFF"));
        assert_eq!(lines.next(), Some("4"));
        assert_eq!(lines.next(), Some("12 16 24"));
        let rest: Vec<&str> = lines.collect();
        // every face line is a triangle here: the zero polytope of each cone
        // is a scaled coordinate triangle
        for face in &rest[12..] {
            let ids: Vec<usize> = face
                .split_whitespace()
                .map(|w| w.parse().unwrap())
                .collect();
            assert_eq!(ids[0], 3);
            assert_eq!(ids.len(), 4);
        }
        assert!(edges.is_some());
    }

    #[test]
    fn graph_betti_agrees_with_order_complex() {
        // for a one-dimensional complex the first Betti number is forced by
        // the Euler formula edges - vertices + components; the order-complex
        // computation must reproduce it
        for text in ["x0^2 + x1^2 - x2^2\n", "x0 + x1 + 0 x2\n"] {
            let cx = complex_for(text);
            let report = analyze(&cx);
            let v = report.cells[0] as i64;
            let e = report.cells[1] as i64;
            let c = report.components as i64;
            assert_eq!(report.betti[0] as i64, c);
            assert_eq!(report.betti[1] as i64, e - v + c);
        }
    }
}
