//! Design isomorphism and automorphisms through the point/block incidence
//! graph.
//!
//! The engine is a small individualization-refinement search. Vertex colours
//! are refined to an equitable ordered partition, the first largest
//! non-singleton cell is split one vertex at a time, and every discrete
//! partition (leaf) yields a relabeled adjacency encoding. The least encoding
//! over all leaves is the certificate. Leaves with equal encodings give
//! automorphisms, which prune the tree: siblings in one orbit of the
//! automorphisms fixing the current path are skipped, and a subtree is
//! abandoned once one of its leaves matches the first or the best leaf.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use thiserror::Error;

use crate::design::Design;
use crate::perm::{PermGroup, Permutation};

/// Groups larger than this are reported by generators and order only.
pub const MATERIALIZE_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("witness map does not carry blocks onto blocks")]
    BadWitness,
    #[error("generated group has order {generated}, search reported {searched}")]
    OrderMismatch { generated: usize, searched: String },
}

/// Bipartite incidence graph: vertices `0..v` are points, `v..v+b` blocks.
#[derive(Debug, Clone)]
pub struct IncidenceGraph {
    v: usize,
    b: usize,
    k: usize,
    adjacency: Vec<Vec<usize>>,
}

impl IncidenceGraph {
    pub fn new(d: &Design) -> Self {
        let (v, b) = (d.v(), d.b());
        let mut adjacency = vec![Vec::new(); v + b];
        for (i, block) in d.blocks().iter().enumerate() {
            for &x in block {
                adjacency[x].push(v + i);
                adjacency[v + i].push(x);
            }
        }
        IncidenceGraph { v, b, k: d.k(), adjacency }
    }

    pub fn vertex_count(&self) -> usize {
        self.v + self.b
    }

    pub fn point_count(&self) -> usize {
        self.v
    }

    pub fn neighbours(&self, u: usize) -> &[usize] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }

    fn initial_colours(&self) -> Vec<u32> {
        (0..self.vertex_count()).map(|u| u32::from(u >= self.v)).collect()
    }

    /// Refines an ordered colouring until every vertex of a cell has the same
    /// number of neighbours in each cell. New colours are ranks of
    /// (old colour, sorted neighbour colours), so the old cell order is kept
    /// and the result does not depend on vertex names.
    fn refine(&self, colours: &mut [u32]) {
        let mut cells = count_cells(colours);
        loop {
            let sigs: Vec<(u32, Vec<u32>)> = (0..colours.len())
                .map(|u| {
                    let mut ns: Vec<u32> = self.adjacency[u].iter().map(|&w| colours[w]).collect();
                    ns.sort_unstable();
                    (colours[u], ns)
                })
                .collect();
            let mut distinct: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
            distinct.sort();
            distinct.dedup();
            if distinct.len() == cells {
                return;
            }
            cells = distinct.len();
            for (u, s) in sigs.iter().enumerate() {
                colours[u] = distinct.binary_search(&s).expect("present") as u32;
            }
        }
    }

    /// Encoding of the graph under a discrete colouring: the header `v b k`,
    /// then for each block position its sorted point positions, as big-endian
    /// u16 words so that byte order agrees with numeric order.
    fn encode(&self, colours: &[u32]) -> Vec<u8> {
        let mut by_pos = vec![0usize; colours.len()];
        for (u, &c) in colours.iter().enumerate() {
            by_pos[c as usize] = u;
        }
        let mut words = vec![self.v as u16, self.b as u16, self.k as u16];
        for &blk in &by_pos[self.v..] {
            let mut row: Vec<u16> = self.adjacency[blk].iter().map(|&x| colours[x] as u16).collect();
            row.sort_unstable();
            words.extend(row);
        }
        words.iter().flat_map(|w| w.to_be_bytes()).collect()
    }
}

fn count_cells(colours: &[u32]) -> usize {
    colours.iter().max().map_or(0, |&m| m as usize + 1)
}

/// Splits `target` out of its cell, placing it first.
fn individualize(colours: &[u32], target: usize) -> Vec<u32> {
    let c = colours[target];
    colours
        .iter()
        .enumerate()
        .map(|(u, &x)| if x > c || (x == c && u != target) { x + 1 } else { x })
        .collect()
}

/// First largest cell with more than one vertex, as a sorted vertex list.
fn target_cell(colours: &[u32]) -> Option<Vec<usize>> {
    let mut sizes = vec![0usize; count_cells(colours)];
    for &c in colours {
        sizes[c as usize] += 1;
    }
    let (best, &size) = sizes.iter().enumerate().rev().max_by_key(|&(_, s)| *s)?;
    (size > 1).then(|| (0..colours.len()).filter(|&u| colours[u] as usize == best).collect())
}

#[derive(Debug, Clone)]
struct Leaf {
    path: Vec<usize>,
    colours: Vec<u32>,
    certificate: Vec<u8>,
}

struct Search<'a> {
    graph: &'a IncidenceGraph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
    nodes: usize,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl<'a> Search<'a> {
    /// Union-find orbits of the automorphisms found so far that fix `path`
    /// pointwise.
    fn orbit_roots(&self, path: &[usize]) -> Vec<usize> {
        let n = self.graph.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        for a in self.automorphisms.iter().filter(|a| path.iter().all(|&p| a[p] == p)) {
            for (x, &y) in a.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx.max(ry)] = rx.min(ry);
                }
            }
        }
        (0..n).map(|x| find(&mut parent, x)).collect()
    }

    /// Vertex map sending the leaf `from` to the leaf `to`.
    fn map_between(from: &[u32], to: &[u32]) -> Vec<usize> {
        let mut at = vec![0usize; to.len()];
        for (u, &c) in to.iter().enumerate() {
            at[c as usize] = u;
        }
        from.iter().map(|&c| at[c as usize]).collect()
    }

    /// Explores the subtree under `path`. `Some(level)` asks every ancestor
    /// deeper than `level` to abandon its remaining children.
    fn explore(&mut self, mut colours: Vec<u32>, path: &mut Vec<usize>) -> Option<usize> {
        self.nodes += 1;
        self.graph.refine(&mut colours);
        let Some(cell) = target_cell(&colours) else {
            return self.leaf(colours, path);
        };
        let depth = path.len();
        let mut tried: Vec<usize> = Vec::new();
        for &u in &cell {
            if !tried.is_empty() {
                let roots = self.orbit_roots(path);
                if tried.iter().any(|&t| roots[t] == roots[u]) {
                    continue;
                }
            }
            tried.push(u);
            path.push(u);
            let jump = self.explore(individualize(&colours, u), path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, colours: Vec<u32>, path: &[usize]) -> Option<usize> {
        let certificate = self.graph.encode(&colours);
        let leaf = Leaf { path: path.to_vec(), colours, certificate };
        let Some(first) = &self.first else {
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return None;
        };
        if leaf.certificate == first.certificate {
            let a = Self::map_between(&first.colours, &leaf.colours);
            let level = common_prefix(&first.path, path);
            self.automorphisms.push(a);
            return Some(level);
        }
        let best = self.best.as_ref().expect("set with first");
        match leaf.certificate.cmp(&best.certificate) {
            std::cmp::Ordering::Less => self.best = Some(leaf),
            std::cmp::Ordering::Equal => {
                let a = Self::map_between(&best.colours, &leaf.colours);
                let level = common_prefix(&best.path, path);
                self.automorphisms.push(a);
                return Some(level);
            }
            std::cmp::Ordering::Greater => {}
        }
        None
    }

    /// |Aut| as the product of first-path orbit lengths in the successive
    /// pointwise stabilizers.
    fn group_order(&self) -> BigUint {
        let first = self.first.as_ref().expect("search reached a leaf");
        let mut order = BigUint::from(1u32);
        for d in 0..first.path.len() {
            let roots = self.orbit_roots(&first.path[..d]);
            let r = roots[first.path[d]];
            order *= roots.iter().filter(|&&x| x == r).count();
        }
        order
    }
}

struct SearchResult {
    best: Leaf,
    automorphisms: Vec<Vec<usize>>,
    order: BigUint,
    nodes: usize,
}

fn run_search(graph: &IncidenceGraph) -> SearchResult {
    let mut s = Search { graph, first: None, best: None, automorphisms: Vec::new(), nodes: 0 };
    s.explore(graph.initial_colours(), &mut Vec::new());
    let order = s.group_order();
    SearchResult { best: s.best.expect("search reached a leaf"), automorphisms: s.automorphisms, order, nodes: s.nodes }
}

/// Canonical labeling of a design's incidence graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Vertex `u` goes to canonical position `relabeling.image(u)`; points
    /// keep positions below `v`.
    pub relabeling: Permutation,
    pub certificate: Vec<u8>,
}

impl CanonicalForm {
    pub fn certificate_hex(&self) -> String {
        hex::encode(&self.certificate)
    }

    /// Restriction of the relabeling to the points.
    pub fn point_relabeling(&self, v: usize) -> Permutation {
        Permutation::new(self.relabeling.images()[..v].to_vec()).expect("points map to points")
    }
}

pub fn canonical_form(d: &Design) -> CanonicalForm {
    let g = IncidenceGraph::new(d);
    let r = run_search(&g);
    let images = r.best.colours.iter().map(|&c| c as usize).collect();
    CanonicalForm { relabeling: Permutation::new(images).expect("discrete colouring"), certificate: r.best.certificate }
}

/// The automorphism group of a design acting on its points.
#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    pub order: BigUint,
    pub generators: Vec<Permutation>,
    /// Present when the order is at most [`MATERIALIZE_LIMIT`].
    pub group: Option<PermGroup>,
    /// Search-tree nodes visited.
    pub nodes: usize,
}

pub fn automorphism_group(d: &Design) -> Result<AutomorphismGroup, IsoError> {
    let g = IncidenceGraph::new(d);
    let r = run_search(&g);
    let v = d.v();
    let mut generators: Vec<Permutation> = r
        .automorphisms
        .iter()
        .map(|a| Permutation::new(a[..v].to_vec()).expect("points map to points"))
        .filter(|p| !p.is_identity())
        .collect();
    generators.sort();
    generators.dedup();
    debug_assert!(generators.iter().all(|p| d.is_automorphism(p)));
    let small = u64::try_from(&r.order).is_ok_and(|o| o <= MATERIALIZE_LIMIT);
    let group = if small {
        let grp = PermGroup::generate(v, &generators).expect("common degree");
        if BigUint::from(grp.order()) != r.order {
            return Err(IsoError::OrderMismatch { generated: grp.order(), searched: r.order.to_string() });
        }
        Some(grp)
    } else {
        None
    };
    Ok(AutomorphismGroup { order: r.order, generators, group, nodes: r.nodes })
}

/// Cheap isomorphism invariants: how many point pairs lie in each number of
/// blocks, and how many block pairs meet in each number of points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairInvariants {
    pub pair_coverage: BTreeMap<usize, usize>,
    pub intersections: BTreeMap<usize, usize>,
}

pub fn pair_invariants(d: &Design) -> PairInvariants {
    let v = d.v();
    let mut cover = vec![0usize; v * v];
    let mut marks = vec![vec![false; v]; d.b()];
    for (i, blk) in d.blocks().iter().enumerate() {
        for (j, &x) in blk.iter().enumerate() {
            marks[i][x] = true;
            for &y in &blk[j + 1..] {
                cover[x * v + y] += 1;
            }
        }
    }
    let mut pair_coverage = BTreeMap::new();
    for x in 0..v {
        for y in (x + 1)..v {
            *pair_coverage.entry(cover[x * v + y]).or_insert(0) += 1;
        }
    }
    let mut intersections = BTreeMap::new();
    for (i, mi) in marks.iter().enumerate() {
        for blk in &d.blocks()[i + 1..] {
            *intersections.entry(blk.iter().filter(|&&x| mi[x]).count()).or_insert(0) += 1;
        }
    }
    PairInvariants { pair_coverage, intersections }
}

/// Isomorphism test. `Ok(Some(w))` carries a verified point bijection with
/// `d1.relabel(w) == d2`.
pub fn are_isomorphic(d1: &Design, d2: &Design) -> Result<Option<Permutation>, IsoError> {
    if (d1.v(), d1.b(), d1.k()) != (d2.v(), d2.b(), d2.k()) || pair_invariants(d1) != pair_invariants(d2) {
        return Ok(None);
    }
    let (c1, c2) = (canonical_form(d1), canonical_form(d2));
    if c1.certificate != c2.certificate {
        return Ok(None);
    }
    let v = d1.v();
    let back = c2.relabeling.inverse();
    let witness = Permutation::new((0..v).map(|x| back.image(c1.relabeling.image(x))).collect())
        .map_err(|_| IsoError::BadWitness)?;
    if &d1.relabel(&witness) != d2 {
        return Err(IsoError::BadWitness);
    }
    Ok(Some(witness))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> Design {
        Design::new(7, (0..7).map(|i| vec![i, (i + 1) % 7, (i + 3) % 7]).collect()).unwrap()
    }

    fn factorial(n: u32) -> BigUint {
        (1..=n).map(BigUint::from).product()
    }

    #[test]
    fn fano_plane_has_168_automorphisms() {
        let a = automorphism_group(&fano()).unwrap();
        assert_eq!(a.order, BigUint::from(168u32));
        assert_eq!(a.group.unwrap().order(), 168);
    }

    #[test]
    fn complete_design_has_full_symmetric_group() {
        // all 2-subsets of 5 points
        let mut blocks = Vec::new();
        for x in 0..5 {
            for y in x + 1..5 {
                blocks.push(vec![x, y]);
            }
        }
        let d = Design::new(5, blocks).unwrap();
        assert_eq!(automorphism_group(&d).unwrap().order, BigUint::from(120u32));
    }

    #[test]
    fn single_block_stress_is_not_materialized() {
        let d = Design::new(36, vec![(0..6).collect()]).unwrap();
        let a = automorphism_group(&d).unwrap();
        assert_eq!(a.order, factorial(6) * factorial(30));
        assert!(a.group.is_none());
        assert!(a.generators.iter().all(|g| d.is_automorphism(g)));
    }

    #[test]
    fn relabeled_fano_is_isomorphic_with_witness() {
        let d = fano();
        let p = Permutation::new(vec![3, 6, 0, 1, 5, 2, 4]).unwrap();
        let e = d.relabel(&p);
        let w = are_isomorphic(&d, &e).unwrap().unwrap();
        assert_eq!(d.relabel(&w), e);
        assert_eq!(canonical_form(&d).certificate, canonical_form(&e).certificate);
    }

    #[test]
    fn non_isomorphic_small_designs() {
        // two 3-block structures on 4 points: a path and a star of pairs
        let path = Design::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        let star = Design::new(4, vec![vec![0, 1], vec![0, 2], vec![0, 3]]).unwrap();
        assert_eq!(are_isomorphic(&path, &star).unwrap(), None);
        assert_ne!(canonical_form(&path).certificate, canonical_form(&star).certificate);
    }

    #[test]
    fn invariants_of_fano() {
        let inv = pair_invariants(&fano());
        assert_eq!(inv.pair_coverage, BTreeMap::from([(1, 21)]));
        assert_eq!(inv.intersections, BTreeMap::from([(1, 21)]));
    }

    #[test]
    fn certificate_hex_has_even_length() {
        let c = canonical_form(&fano());
        assert_eq!(c.certificate_hex().len(), 2 * c.certificate.len());
        assert_eq!(c.point_relabeling(7).degree(), 7);
    }
}
