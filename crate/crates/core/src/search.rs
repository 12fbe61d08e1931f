//! Parameter arithmetic for flag-transitive 2-(k²,k,λ) designs and the
//! completeness search for orbit designs on the 36 secants.
//!
//! A flag-transitive 2-(36,6,λ) orbit design under a group H has
//! b = 42λ blocks, so its base block has a stabilizer of order |H|/(42λ).
//! Whenever that order is divisible by 3 the stabilizer holds an element of
//! order 3, and up to conjugacy the base block is a union of cycles of one of
//! the order-3 class representatives. The pruned search enumerates exactly
//! those unions. The exhaustive search scans every 6-subset instead.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::design::{orbit_design, verify_2design, verify_flag_transitive, Design, DesignError, DesignParams};
use crate::iso::{canonical_form, IsoError};
use crate::perm::{PermGroup, Permutation};
use crate::ree::ReeModel;

/// Environment variable capping the number of search worker threads.
pub const WORKERS_ENV: &str = "SECANT_DESIGNS_WORKERS";

/// Block size of the designs on the secants.
pub const K: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("λ must be positive")]
    ZeroLambda,
    #[error("k = {k} gives no nontrivial design (need 2 < k < v = k²)")]
    Trivial { k: usize },
    #[error("λ = {lambda} does not divide k = {k}")]
    NotDivisor { k: usize, lambda: usize },
    #[error("{group}: λ = {lambda} needs |H| divisible by {blocks}")]
    NoSuchOrder { group: &'static str, lambda: usize, blocks: usize },
    #[error("{group}: λ = {lambda} forces block stabilizer order {order}, not divisible by 3; use the exhaustive mode")]
    PruningUnsound { group: &'static str, lambda: usize, order: usize },
    #[error("invalid worker count {0:?}")]
    Workers(String),
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error(transparent)]
    Iso(#[from] IsoError),
}

/// Admissible parameters of a 2-(k², k, λ) design.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Admissible {
    pub params: DesignParams,
    /// Whether (r/λ)² > k²; always true, kept for audit.
    pub ratio_exceeds_k: bool,
}

pub fn admissible_params(k: usize, lambda: usize) -> Result<Admissible, SearchError> {
    if lambda == 0 {
        return Err(SearchError::ZeroLambda);
    }
    if k < 3 {
        return Err(SearchError::Trivial { k });
    }
    if !k.is_multiple_of(lambda) {
        return Err(SearchError::NotDivisor { k, lambda });
    }
    let v = k * k;
    let r = lambda * (k + 1);
    let b = lambda * k * (k + 1);
    let ratio = r / lambda;
    Ok(Admissible { params: DesignParams { v, b, r, k, lambda }, ratio_exceeds_k: ratio * ratio > k * k })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Passes iff (k+1)/gcd(k+1, out) divides the point-stabilizer order.
pub fn outer_divisibility_filter(k: usize, out_order: u64, stab_order: u64) -> bool {
    let n = (k + 1) as u64;
    let d = n / gcd(n as usize, out_order as usize) as u64;
    stab_order.is_multiple_of(d)
}

/// Number of 6-sets that are unions of cycles of a permutation with `c`
/// 3-cycles and `f` fixed points.
pub fn invariant_six_sets(c: usize, f: usize) -> usize {
    (0..=2).filter(|&j| 3 * j <= K).map(|j| binomial(c, j) * binomial(f, K - 3 * j)).sum()
}

pub fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SearchGroup {
    G,
    GPrime,
}

impl SearchGroup {
    pub fn label(self) -> &'static str {
        match self {
            SearchGroup::G => "G",
            SearchGroup::GPrime => "G'",
        }
    }

    pub fn group(self, m: &ReeModel) -> &PermGroup {
        match self {
            SearchGroup::G => &m.g,
            SearchGroup::GPrime => &m.gder,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Pruned,
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    pub group: SearchGroup,
    pub lambdas: Vec<usize>,
    pub mode: SearchMode,
}

impl SearchOptions {
    pub fn new(group: SearchGroup, lambdas: &[usize], mode: SearchMode) -> Self {
        SearchOptions { group, lambdas: lambdas.to_vec(), mode }
    }
}

/// Divisors of 6, the admissible λ for k = 6.
pub const ALL_LAMBDAS: [usize; 4] = [1, 2, 3, 6];

/// A 6-set invariant under an order-3 element, with its stabilizer order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateBlock {
    pub block: Vec<usize>,
    pub stab_order: usize,
    pub source_element: Permutation,
}

/// One isomorphism class found by a search.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub params: DesignParams,
    /// Least block of the design; its orbit is the design.
    pub base_block: Vec<usize>,
    pub stab_order: usize,
    /// The order-3 element the block was found from (pruned mode only).
    pub source_element: Option<Permutation>,
    pub design: Design,
    pub certificate: Vec<u8>,
}

/// Closed-form versus enumerated count of invariant 6-sets for one
/// order-3 representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantCount {
    pub representative: Permutation,
    pub three_cycles: usize,
    pub fixed_points: usize,
    pub enumerated: usize,
    pub closed_form: usize,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub group: SearchGroup,
    pub mode: SearchMode,
    pub lambdas: Vec<usize>,
    /// Entries ordered by (λ, certificate).
    pub entries: Vec<CatalogEntry>,
    /// 6-sets whose stabilizer was examined.
    pub candidates: usize,
    /// Blocks with the required stabilizer, transitive on themselves, whose
    /// orbit still failed to be a 2-design.
    pub rejected: usize,
    /// Pruned mode only.
    pub invariant_counts: Vec<InvariantCount>,
}

impl Catalog {
    pub fn count_by_lambda(&self) -> BTreeMap<usize, usize> {
        let mut m: BTreeMap<usize, usize> = self.lambdas.iter().map(|&l| (l, 0)).collect();
        for e in &self.entries {
            *m.entry(e.params.lambda).or_insert(0) += 1;
        }
        m
    }

    /// `4 classes: λ=2 ×1, λ=6 ×3`; λ values with no class are omitted.
    pub fn summary(&self) -> String {
        let parts: Vec<String> = self
            .count_by_lambda()
            .iter()
            .filter(|(_, &n)| n > 0)
            .map(|(l, n)| format!("λ={l} ×{n}"))
            .collect();
        let noun = if self.entries.len() == 1 { "class" } else { "classes" };
        if parts.is_empty() {
            format!("0 {noun}")
        } else {
            format!("{} {noun}: {}", self.entries.len(), parts.join(", "))
        }
    }
}

/// Stabilizer order a base block must have for a given λ, checked to be
/// divisible by 3 when the pruned search relies on it.
pub fn required_stabilizer_order(group: SearchGroup, order: usize, lambda: usize) -> Result<usize, SearchError> {
    let blocks = 42 * lambda;
    if lambda == 0 || !order.is_multiple_of(blocks) {
        return Err(SearchError::NoSuchOrder { group: group.label(), lambda, blocks });
    }
    Ok(order / blocks)
}

fn worker_pool() -> Result<rayon::ThreadPool, SearchError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(raw) = std::env::var(WORKERS_ENV) {
        let n: usize = raw.trim().parse().map_err(|_| SearchError::Workers(raw.clone()))?;
        if n == 0 {
            return Err(SearchError::Workers(raw));
        }
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| SearchError::Workers(e.to_string()))
}

/// All 6-sets that are unions of cycles of `g`, in lexicographic order.
pub fn invariant_six_subsets(g: &Permutation) -> Vec<Vec<usize>> {
    let cycles = g.cycles();
    let mut pieces: Vec<Vec<usize>> = cycles.into_iter().filter(|c| c.len() <= K).collect();
    pieces.extend(g.fixed_points().into_iter().map(|x| vec![x]));
    pieces.sort();
    pieces.dedup();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(pieces: &[Vec<usize>], start: usize, size: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if size == K {
            let mut s: Vec<usize> = chosen.iter().flat_map(|&i| pieces[i].iter().copied()).collect();
            s.sort_unstable();
            out.push(s);
            return;
        }
        for i in start..pieces.len() {
            if size + pieces[i].len() <= K {
                chosen.push(i);
                rec(pieces, i + 1, size + pieces[i].len(), chosen, out);
                chosen.pop();
            }
        }
    }
    rec(&pieces, 0, 0, &mut chosen, &mut out);
    out.sort();
    out
}

fn set_stabilizer_transitive(h: &PermGroup, block: &[usize]) -> (usize, bool) {
    let stab = h.set_stabilizer(block);
    let mut reach: Vec<usize> = stab.elements().iter().map(|x| x.image(block[0])).collect();
    reach.sort_unstable();
    reach.dedup();
    (stab.order(), reach.len() == block.len())
}

struct Found {
    base: Vec<usize>,
    stab_order: usize,
    source: Option<Permutation>,
}

/// Builds the orbit design of every stabilizer-filtered block, keeps the
/// 2-designs, and deduplicates by certificate. Returns the entries and the
/// number of filtered blocks whose orbit was not a 2-design.
fn certify(h: &PermGroup, found: Vec<Found>) -> Result<(Vec<CatalogEntry>, usize), SearchError> {
    let entries: Vec<Result<Option<CatalogEntry>, SearchError>> = found
        .into_par_iter()
        .map(|f| {
            let design = orbit_design(h, &f.base)?;
            let params = match verify_2design(&design) {
                Ok(p) => p,
                Err(DesignError::NonConstantLambda { .. } | DesignError::NonConstantReplication { .. }) => {
                    return Ok(None)
                }
                Err(e) => return Err(e.into()),
            };
            if !verify_flag_transitive(h, &design)? {
                return Err(SearchError::Design(DesignError::ParameterIdentity(format!(
                    "orbit of {:?} is not flag-transitive",
                    f.base
                ))));
            }
            let certificate = canonical_form(&design).certificate;
            Ok(Some(CatalogEntry {
                params,
                base_block: design.blocks()[0].clone(),
                stab_order: f.stab_order,
                source_element: f.source,
                design,
                certificate,
            }))
        })
        .collect();
    let mut by_cert: BTreeMap<(usize, Vec<u8>), CatalogEntry> = BTreeMap::new();
    let mut rejected = 0;
    for e in entries {
        match e? {
            Some(e) => {
                by_cert.entry((e.params.lambda, e.certificate.clone())).or_insert(e);
            }
            None => rejected += 1,
        }
    }
    Ok((by_cert.into_values().collect(), rejected))
}

/// Every flag-transitive orbit design 2-(36,6,λ) under the chosen group for
/// the requested λ, up to isomorphism.
pub fn completeness_search(model: &ReeModel, opts: &SearchOptions) -> Result<Catalog, SearchError> {
    let h = opts.group.group(model);
    let mut wanted: BTreeMap<usize, usize> = BTreeMap::new();
    for &l in &opts.lambdas {
        let s = required_stabilizer_order(opts.group, h.order(), l)?;
        if opts.mode == SearchMode::Pruned && s % 3 != 0 {
            return Err(SearchError::PruningUnsound { group: opts.group.label(), lambda: l, order: s });
        }
        wanted.insert(s, l);
    }
    let pool = worker_pool()?;
    pool.install(|| match opts.mode {
        SearchMode::Pruned => pruned(h, opts, &wanted),
        SearchMode::Exhaustive => exhaustive(h, opts, &wanted),
    })
}

fn pruned(h: &PermGroup, opts: &SearchOptions, wanted: &BTreeMap<usize, usize>) -> Result<Catalog, SearchError> {
    let mut counts = Vec::new();
    let mut candidates: Vec<CandidateBlock> = Vec::new();
    for class in h.prime_order_subgroup_classes(3) {
        let g = class.representative;
        let subsets = invariant_six_subsets(&g);
        let three_cycles = g.cycles().iter().filter(|c| c.len() == 3).count();
        let fixed_points = g.fixed_points().len();
        counts.push(InvariantCount {
            representative: g.clone(),
            three_cycles,
            fixed_points,
            enumerated: subsets.len(),
            closed_form: invariant_six_sets(three_cycles, fixed_points),
        });
        let evaluated: Vec<(Vec<usize>, usize, bool)> = subsets
            .into_par_iter()
            .map(|b| {
                let (s, t) = set_stabilizer_transitive(h, &b);
                (b, s, t)
            })
            .collect();
        candidates.extend(evaluated.into_iter().filter(|(_, s, t)| *t && wanted.contains_key(s)).map(
            |(block, stab_order, _)| CandidateBlock { block, stab_order, source_element: g.clone() },
        ));
    }
    let examined = counts.iter().map(|c| c.enumerated).sum();
    let found = candidates
        .into_iter()
        .map(|c| Found { base: c.block, stab_order: c.stab_order, source: Some(c.source_element) })
        .collect();
    let (entries, rejected) = certify(h, found)?;
    Ok(Catalog {
        group: opts.group,
        mode: SearchMode::Pruned,
        lambdas: opts.lambdas.clone(),
        entries,
        candidates: examined,
        rejected,
        invariant_counts: counts,
    })
}

/// Scans all 6-subsets. For a block B with least point x, only group
/// elements sending x into B can stabilize B, and B's stabilizer is
/// transitive on B iff each y ∈ B is reached by one of them.
fn exhaustive(h: &PermGroup, opts: &SearchOptions, wanted: &BTreeMap<usize, usize>) -> Result<Catalog, SearchError> {
    let n = h.degree();
    let images: Vec<Vec<u8>> = h.elements().iter().map(|g| g.images().iter().map(|&x| x as u8).collect()).collect();
    let mut sending: Vec<Vec<u32>> = vec![Vec::new(); n * n];
    for (i, img) in images.iter().enumerate() {
        for x in 0..n {
            sending[x * n + img[x] as usize].push(i as u32);
        }
    }
    let check = |b: &[usize; K]| -> Option<usize> {
        let mask: u64 = b.iter().fold(0, |m, &x| m | (1 << x));
        let mut total = 0;
        for &y in b {
            let mut reached = 0;
            for &e in &sending[b[0] * n + y] {
                let img = &images[e as usize];
                if b.iter().all(|&z| mask >> img[z] & 1 == 1) {
                    reached += 1;
                }
            }
            if reached == 0 {
                return None;
            }
            total += reached;
        }
        wanted.contains_key(&total).then_some(total)
    };
    let hits: Vec<([usize; K], usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut local = Vec::new();
            let mut b = [a, 0, 0, 0, 0, 0];
            for b1 in a + 1..n {
                b[1] = b1;
                for b2 in b1 + 1..n {
                    b[2] = b2;
                    for b3 in b2 + 1..n {
                        b[3] = b3;
                        for b4 in b3 + 1..n {
                            b[4] = b4;
                            for b5 in b4 + 1..n {
                                b[5] = b5;
                                if let Some(s) = check(&b) {
                                    local.push((b, s));
                                }
                            }
                        }
                    }
                }
            }
            local
        })
        .collect();
    let mut seen = std::collections::HashSet::new();
    let mut found = Vec::new();
    for (b, s) in &hits {
        if seen.contains(b.as_slice()) {
            continue;
        }
        for img in h.set_orbit(b) {
            seen.insert(img);
        }
        found.push(Found { base: b.to_vec(), stab_order: *s, source: None });
    }
    let (entries, rejected) = certify(h, found)?;
    Ok(Catalog {
        group: opts.group,
        mode: SearchMode::Exhaustive,
        lambdas: opts.lambdas.clone(),
        entries,
        candidates: binomial(n, K),
        rejected,
        invariant_counts: Vec::new(),
    })
}

/// The search under G′ at λ = 2.
pub fn g_prime_completeness_search(model: &ReeModel) -> Result<Catalog, SearchError> {
    completeness_search(model, &SearchOptions::new(SearchGroup::GPrime, &[2], SearchMode::Pruned))
}

/// The four orbit designs of the base blocks B₁..B₄ under G, with their
/// certificates.
pub fn reference_designs(model: &ReeModel) -> Result<Vec<(Design, Vec<u8>)>, SearchError> {
    model
        .base_blocks()
        .iter()
        .map(|b| {
            let d = orbit_design(&model.g, b)?;
            let c = canonical_form(&d).certificate;
            Ok((d, c))
        })
        .collect()
}

/// Index (0-based) of the reference design with the same certificate.
pub fn match_reference(entry: &CatalogEntry, refs: &[(Design, Vec<u8>)]) -> Option<usize> {
    refs.iter().position(|(_, c)| *c == entry.certificate)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissible_examples() {
        let p = admissible_params(6, 2).unwrap().params;
        assert_eq!((p.v, p.r, p.b), (36, 14, 84));
        let p = admissible_params(6, 6).unwrap().params;
        assert_eq!((p.v, p.r, p.b), (36, 42, 252));
        assert_eq!(admissible_params(3, 3).unwrap().params.r, 12);
        assert_eq!(admissible_params(6, 4), Err(SearchError::NotDivisor { k: 6, lambda: 4 }));
        assert_eq!(admissible_params(2, 1), Err(SearchError::Trivial { k: 2 }));
        assert_eq!(admissible_params(6, 0), Err(SearchError::ZeroLambda));
    }

    #[test]
    fn outer_filter_examples() {
        assert!(!outer_divisibility_filter(12, 1, 55));
        assert!(!outer_divisibility_filter(45, 2, 443_520));
        assert!(outer_divisibility_filter(6, 3, 42));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(36, 6), 1_947_792);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(invariant_six_sets(2, 0), 1);
        assert_eq!(invariant_six_sets(0, 6), 1);
    }

    #[test]
    fn invariant_subsets_match_closed_form() {
        // (0 1 2)(3 4 5) on 9 points: 3 fixed points
        let g = Permutation::new(vec![1, 2, 0, 4, 5, 3, 6, 7, 8]).unwrap();
        let subs = invariant_six_subsets(&g);
        assert_eq!(subs.len(), invariant_six_sets(2, 3));
        assert!(subs.iter().all(|s| g.apply_set(s) == *s));
    }

    #[test]
    fn summary_text() {
        let c = Catalog {
            group: SearchGroup::G,
            mode: SearchMode::Pruned,
            lambdas: vec![1, 3],
            entries: vec![],
            candidates: 0,
            rejected: 0,
            invariant_counts: vec![],
        };
        assert_eq!(c.summary(), "0 classes");
    }
}

#[cfg(test)]
mod model_tests {
    use std::sync::LazyLock;

    use super::*;

    static MODEL: LazyLock<ReeModel> = LazyLock::new(|| ReeModel::build().unwrap());

    fn matched(c: &Catalog) -> Vec<(usize, Option<usize>)> {
        let refs = reference_designs(&MODEL).unwrap();
        c.entries.iter().map(|e| (e.params.lambda, match_reference(e, &refs))).collect()
    }

    #[test]
    fn pruned_search_under_g_finds_the_four_designs() {
        let c = completeness_search(&MODEL, &SearchOptions::new(SearchGroup::G, &ALL_LAMBDAS, SearchMode::Pruned))
            .unwrap();
        assert_eq!(c.summary(), "4 classes: λ=2 ×1, λ=6 ×3");
        let mut m = matched(&c);
        m.sort();
        assert_eq!(m, vec![(2, Some(0)), (6, Some(1)), (6, Some(2)), (6, Some(3))]);
        assert_eq!(c.invariant_counts.len(), 2);
        for ic in &c.invariant_counts {
            assert_eq!(ic.enumerated, ic.closed_form);
        }
        assert_eq!(c.count_by_lambda()[&1], 0);
        assert_eq!(c.count_by_lambda()[&3], 0);
    }

    #[test]
    fn g_prime_search_finds_only_the_first_design() {
        let c = g_prime_completeness_search(&MODEL).unwrap();
        assert_eq!(matched(&c), vec![(2, Some(0))]);
        let e = &c.entries[0];
        let stab = MODEL.gder.set_stabilizer(&e.base_block);
        assert_eq!(stab.order(), 6);
        assert_eq!(stab.structure_label(), Some("S3"));
        // conjugate to ⟨η, σ⟩ in G′
        let target: std::collections::BTreeSet<_> = MODEL.cg_eta.elements().iter().cloned().collect();
        assert!(MODEL.gder.elements().iter().any(|x| {
            stab.elements().iter().map(|s| s.conjugate_by(x)).collect::<std::collections::BTreeSet<_>>() == target
        }));
        // the line stabilizer in G′ is D14 and meets the block stabilizer trivially
        let l = e.design.blocks_through(0);
        assert!(!l.is_empty());
        let gl = MODEL.gder.stabilizer(0);
        assert_eq!(gl.order(), 14);
        assert_eq!(gl.structure_label(), Some("D14"));
        let b1 = &e.design.blocks()[l[0]];
        assert_eq!(gl.set_stabilizer(b1).order(), 1);
    }

    #[test]
    fn pruned_g_prime_rejects_unsound_lambdas() {
        let r = completeness_search(&MODEL, &SearchOptions::new(SearchGroup::GPrime, &[6], SearchMode::Pruned));
        assert!(matches!(r, Err(SearchError::PruningUnsound { order: 2, .. })));
    }

    #[test]
    fn every_required_stabilizer_order_under_g_is_divisible_by_three() {
        for l in ALL_LAMBDAS {
            let s = required_stabilizer_order(SearchGroup::G, 1512, l).unwrap();
            assert!([36, 18, 12, 6].contains(&s));
            assert_eq!(s % 3, 0);
        }
    }

    #[test]
    fn exhaustive_scan_agrees_with_pruned_search() {
        let certs = |mode| -> Vec<(usize, Vec<u8>)> {
            let c = completeness_search(&MODEL, &SearchOptions::new(SearchGroup::G, &ALL_LAMBDAS, mode)).unwrap();
            c.entries.iter().map(|e| (e.params.lambda, e.certificate.clone())).collect()
        };
        assert_eq!(certs(SearchMode::Exhaustive), certs(SearchMode::Pruned));
    }
}
