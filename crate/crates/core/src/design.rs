//! Incidence structures: designs as a point count plus a sorted list of
//! distinct sorted blocks, orbit designs, and the checks for 2-design
//! parameters, flag-transitivity and tactical decompositions.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{PermGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DesignError {
    #[error("a design needs at least one block")]
    NoBlocks,
    #[error("block {block} has size {found}, expected {expected}")]
    BlockSize { block: usize, expected: usize, found: usize },
    #[error("block {block} contains point {point}, outside 0..{v}")]
    PointOutOfRange { block: usize, point: usize, v: usize },
    #[error("block {block} repeats a point")]
    RepeatedPoint { block: usize },
    #[error("block {block:?} occurs more than once")]
    RepeatedBlock { block: Vec<usize> },
    #[error("pair {pair:?} lies in {count} blocks, but pair {reference:?} lies in {expected}")]
    NonConstantLambda { pair: (usize, usize), count: usize, reference: (usize, usize), expected: usize },
    #[error("point {point} lies in {count} blocks, but point 0 lies in {expected}")]
    NonConstantReplication { point: usize, count: usize, expected: usize },
    #[error("parameter identity fails: {0}")]
    ParameterIdentity(String),
    #[error("group degree {group} does not match design order {v}")]
    DegreeMismatch { group: usize, v: usize },
    #[error("generator {generator} maps block {block:?} outside the block set")]
    NotInvariant { generator: usize, block: Vec<usize> },
    #[error("generator {generator} moves point {point}")]
    NotFixing { generator: usize, point: usize },
    #[error("orbit pair ({point_orbit}, {block_orbit}) is not a tactical configuration")]
    NotTactical { point_orbit: usize, block_orbit: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignParams {
    pub v: usize,
    pub b: usize,
    pub r: usize,
    pub k: usize,
    pub lambda: usize,
}

impl std::fmt::Display for DesignParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "2-({},{},{}), b={}, r={}", self.v, self.k, self.lambda, self.b, self.r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Design {
    v: usize,
    k: usize,
    blocks: Vec<Vec<usize>>,
}

impl Design {
    pub fn new(v: usize, blocks: Vec<Vec<usize>>) -> Result<Design, DesignError> {
        let k = blocks.first().ok_or(DesignError::NoBlocks)?.len();
        let mut sorted = Vec::with_capacity(blocks.len());
        for (i, mut b) in blocks.into_iter().enumerate() {
            if b.len() != k {
                return Err(DesignError::BlockSize { block: i, expected: k, found: b.len() });
            }
            if let Some(&p) = b.iter().find(|&&p| p >= v) {
                return Err(DesignError::PointOutOfRange { block: i, point: p, v });
            }
            b.sort_unstable();
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(DesignError::RepeatedPoint { block: i });
            }
            sorted.push(b);
        }
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(DesignError::RepeatedBlock { block: w[0].clone() });
        }
        Ok(Design { v, k, blocks: sorted })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Position of a sorted block in the block list.
    pub fn block_index(&self, block: &[usize]) -> Option<usize> {
        self.blocks.binary_search_by(|b| b.as_slice().cmp(block)).ok()
    }

    pub fn blocks_through(&self, x: usize) -> Vec<usize> {
        (0..self.b()).filter(|&i| self.blocks[i].binary_search(&x).is_ok()).collect()
    }

    pub fn flag_count(&self) -> usize {
        self.b() * self.k
    }

    /// The design with every point `x` renamed `p(x)`.
    pub fn relabel(&self, p: &Permutation) -> Design {
        let blocks = self.blocks.iter().map(|b| p.apply_set(b)).collect();
        Design::new(self.v, blocks).expect("relabeling preserves validity")
    }

    /// The permutation of block positions induced by a point permutation, if
    /// the point permutation preserves the block set.
    pub fn block_action(&self, p: &Permutation) -> Option<Permutation> {
        let images = self.blocks.iter().map(|b| self.block_index(&p.apply_set(b))).collect::<Option<Vec<_>>>()?;
        Some(Permutation::new(images).expect("injective on a finite set"))
    }

    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.v && self.blocks.iter().all(|b| self.block_index(&p.apply_set(b)).is_some())
    }

    /// `v b k` on the first line, then one block per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.v, self.b(), self.k);
        for b in &self.blocks {
            let row: Vec<String> = b.iter().map(usize::to_string).collect();
            writeln!(out, "{}", row.join(" ")).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Design, DesignError> {
        let parse_row = |line: usize, row: &str| {
            row.split_whitespace()
                .map(str::parse::<usize>)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| DesignError::Parse { line, message: e.to_string() })
        };
        let mut rows = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = rows.next().ok_or(DesignError::Parse { line: 1, message: "empty input".into() })?;
        let h = parse_row(1, header)?;
        let [v, b, k] = h[..] else {
            return Err(DesignError::Parse { line: 1, message: "header must be `v b k`".into() });
        };
        let blocks = rows.map(|(i, r)| parse_row(i + 1, r)).collect::<Result<Vec<_>, _>>()?;
        if blocks.len() != b {
            return Err(DesignError::Parse {
                line: 1,
                message: format!("header announces {b} blocks, found {}", blocks.len()),
            });
        }
        let d = Design::new(v, blocks)?;
        if d.k != k {
            return Err(DesignError::Parse { line: 1, message: format!("header announces k={k}, blocks have {}", d.k) });
        }
        Ok(d)
    }
}

/// Machine-readable export of a design with its parameters and origin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignExport {
    pub v: usize,
    pub k: usize,
    pub b: usize,
    pub blocks: Vec<Vec<usize>>,
    pub params: Option<DesignParams>,
    pub provenance: Option<Provenance>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub base_block: Vec<usize>,
    pub group: String,
}

impl DesignExport {
    pub fn new(d: &Design, params: Option<DesignParams>, provenance: Option<Provenance>) -> Self {
        DesignExport { v: d.v, k: d.k, b: d.b(), blocks: d.blocks.clone(), params, provenance }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

/// The design whose blocks are the images of `base` under `g`.
pub fn orbit_design(g: &PermGroup, base: &[usize]) -> Result<Design, DesignError> {
    if let Some(&p) = base.iter().find(|&&p| p >= g.degree()) {
        return Err(DesignError::PointOutOfRange { block: 0, point: p, v: g.degree() });
    }
    let blocks = g.set_orbit(base);
    debug_assert_eq!(blocks.len() * g.set_stabilizer(base).order(), g.order());
    Design::new(g.degree(), blocks)
}

/// Counts blocks through every pair and every point; succeeds iff both counts
/// are constant.
pub fn verify_2design(d: &Design) -> Result<DesignParams, DesignError> {
    let v = d.v;
    let mut pair = vec![0usize; v * v];
    let mut rep = vec![0usize; v];
    for b in &d.blocks {
        for (i, &x) in b.iter().enumerate() {
            rep[x] += 1;
            for &y in &b[i + 1..] {
                pair[x * v + y] += 1;
            }
        }
    }
    let lambda = if v >= 2 { pair[1] } else { 0 };
    for x in 0..v {
        for y in (x + 1)..v {
            if pair[x * v + y] != lambda {
                return Err(DesignError::NonConstantLambda {
                    pair: (x, y),
                    count: pair[x * v + y],
                    reference: (0, 1),
                    expected: lambda,
                });
            }
        }
    }
    let r = rep[0];
    if let Some(x) = (0..v).find(|&x| rep[x] != r) {
        return Err(DesignError::NonConstantReplication { point: x, count: rep[x], expected: r });
    }
    let (b, k) = (d.b(), d.k);
    if b * k != v * r {
        return Err(DesignError::ParameterIdentity(format!("bk = {} but vr = {}", b * k, v * r)));
    }
    if r * (k.saturating_sub(1)) != lambda * (v.saturating_sub(1)) {
        return Err(DesignError::ParameterIdentity(format!(
            "r(k-1) = {} but λ(v-1) = {}",
            r * (k - 1),
            lambda * (v - 1)
        )));
    }
    Ok(DesignParams { v, b, r, k, lambda })
}

fn check_invariant(g: &PermGroup, d: &Design) -> Result<(), DesignError> {
    if g.degree() != d.v {
        return Err(DesignError::DegreeMismatch { group: g.degree(), v: d.v });
    }
    for (i, gen) in g.generators().iter().enumerate() {
        if let Some(b) = d.blocks.iter().find(|b| d.block_index(&gen.apply_set(b)).is_none()) {
            return Err(DesignError::NotInvariant { generator: i, block: b.clone() });
        }
    }
    Ok(())
}

/// True iff `g` is transitive on flags: transitive on blocks, with the
/// stabilizer of one block transitive on its points.
pub fn verify_flag_transitive(g: &PermGroup, d: &Design) -> Result<bool, DesignError> {
    check_invariant(g, d)?;
    let base = &d.blocks[0];
    if g.set_orbit(base).len() != d.b() {
        return Ok(false);
    }
    let stab = g.set_stabilizer(base);
    let mut reach: Vec<usize> = stab.elements().iter().map(|x| x.image(base[0])).collect();
    reach.sort_unstable();
    reach.dedup();
    Ok(reach.len() == d.k)
}

/// One pair (point orbit Δ, block orbit β) of a point stabilizer, with the
/// constants v′ = |Δ|, b′ = |β|, k′ = |B ∩ Δ| and r′ = #{B ∈ β : y ∈ B}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TacticalRecord {
    pub point_orbit: Vec<usize>,
    /// Block positions in the design.
    pub block_orbit: Vec<usize>,
    /// Whether the blocks of `block_orbit` contain the fixed point.
    pub through_point: bool,
    pub v: usize,
    pub b: usize,
    pub k: usize,
    pub r: usize,
}

impl TacticalRecord {
    pub fn params(&self) -> (usize, usize, usize, usize) {
        (self.v, self.b, self.k, self.r)
    }
}

/// Decomposes the design along the orbits of `gx`, a group fixing `x`, and
/// checks that each (point orbit, block orbit) pair is tactical. Point orbits
/// other than {x} are reported against every block orbit.
pub fn tactical_decomposition(gx: &PermGroup, d: &Design, x: usize) -> Result<Vec<TacticalRecord>, DesignError> {
    check_invariant(gx, d)?;
    if let Some(i) = gx.generators().iter().position(|g| g.image(x) != x) {
        return Err(DesignError::NotFixing { generator: i, point: x });
    }
    let block_gens: Vec<Permutation> =
        gx.generators().iter().map(|g| d.block_action(g).expect("invariant")).collect();
    let block_group = PermGroup::generate(d.b(), &block_gens).expect("same degree");
    let block_orbits = block_group.all_orbits();
    let point_orbits: Vec<Vec<usize>> = gx.all_orbits().into_iter().filter(|o| o != &[x]).collect();

    let mut out = Vec::new();
    for (pi, delta) in point_orbits.iter().enumerate() {
        let mut in_delta = vec![false; d.v];
        for &y in delta {
            in_delta[y] = true;
        }
        for (bi, beta) in block_orbits.iter().enumerate() {
            let meets: Vec<usize> =
                beta.iter().map(|&b| d.blocks[b].iter().filter(|&&y| in_delta[y]).count()).collect();
            let reps: Vec<usize> = delta
                .iter()
                .map(|&y| beta.iter().filter(|&&b| d.blocks[b].binary_search(&y).is_ok()).count())
                .collect();
            if meets.windows(2).any(|w| w[0] != w[1]) || reps.windows(2).any(|w| w[0] != w[1]) {
                return Err(DesignError::NotTactical { point_orbit: pi, block_orbit: bi });
            }
            out.push(TacticalRecord {
                point_orbit: delta.clone(),
                block_orbit: beta.clone(),
                through_point: d.blocks[beta[0]].binary_search(&x).is_ok(),
                v: delta.len(),
                b: beta.len(),
                k: meets[0],
                r: reps[0],
            });
        }
    }
    Ok(out)
}
