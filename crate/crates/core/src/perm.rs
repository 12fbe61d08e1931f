//! Dense permutations and a small permutation-group engine.
//!
//! Groups are fully materialized: every element is stored, sorted
//! lexicographically by image sequence. At degree 36 and order ≤ 1512 exact
//! scans over the element list answer every query (stabilizers,
//! centralizers, normalizers, conjugacy) directly.
//!
//! Permutations act on the right: `a.then(&b)` maps `x` to `b(a(x))`, which
//! matches the exponent notation `x^(ab) = (x^a)^b`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;
use std::hash::{Hash, Hasher};

use thiserror::Error;

/// Modulus of the optional Frobenius tag carried by permutations.
pub const TAG_MODULUS: u8 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("images do not form a bijection on 0..{degree}")]
    NotBijection { degree: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("element is not in the group")]
    NotMember,
    #[error("subgroup is not contained in the group")]
    NotSubgroup,
    #[error("group is not transitive on its {degree} points")]
    Intransitive { degree: usize },
    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("generator input line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A permutation of `0..n` with an optional Frobenius-exponent tag.
///
/// Equality, ordering and hashing look only at the images; the tag is
/// bookkeeping that composes additively modulo [`TAG_MODULUS`].
#[derive(Debug, Clone)]
pub struct Permutation {
    images: Vec<u32>,
    tag: Option<u8>,
}

impl PartialEq for Permutation {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for Permutation {}

impl Hash for Permutation {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.images.hash(state);
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.images.cmp(&other.images)
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(PermError::NotBijection { degree: n });
            }
        }
        Ok(Permutation { images: images.into_iter().map(|i| i as u32).collect(), tag: None })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u32).collect(), tag: None }
    }

    pub fn with_tag(mut self, tag: u8) -> Self {
        self.tag = Some(tag % TAG_MODULUS);
        self
    }

    pub fn tag(&self) -> Option<u8> {
        self.tag
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize).collect()
    }

    pub fn raw_images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
            tag: match (self.tag, other.tag) {
                (Some(a), Some(b)) => Some((a + b) % TAG_MODULUS),
                _ => None,
            },
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv, tag: self.tag.map(|t| (TAG_MODULUS - t) % TAG_MODULUS) }
    }

    /// `x^-1 · self · x`.
    pub fn conjugate_by(&self, x: &Permutation) -> Permutation {
        x.inverse().then(self).then(x)
    }

    pub fn pow(&self, e: usize) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        acc.tag = self.tag.map(|_| 0);
        for _ in 0..e {
            acc = acc.then(self);
        }
        acc
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len()))
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        (0..self.degree()).all(|i| other.images[self.images[i] as usize] == self.images[other.images[i] as usize])
    }

    /// All cycles including fixed points, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.image(i) == i).collect()
    }

    /// Sorted image of a point set.
    pub fn apply_set(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = set.iter().map(|&x| self.image(x)).collect();
        out.sort_unstable();
        out
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Result of a primitivity test on a transitive group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Primitivity {
    Primitive,
    /// A nontrivial block system, blocks sorted by least element.
    Imprimitive { blocks: Vec<Vec<usize>> },
}

impl Primitivity {
    pub fn is_primitive(&self) -> bool {
        matches!(self, Primitivity::Primitive)
    }
}

/// One conjugacy class of subgroups of prime order.
#[derive(Debug, Clone)]
pub struct SubgroupClass {
    /// The lexicographically least nonidentity element over the whole class.
    pub representative: Permutation,
    /// Number of subgroups in the class.
    pub size: usize,
    /// Order of the centralizer of `representative`.
    pub centralizer_order: usize,
}

/// A materialized permutation group.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

fn closure_set(degree: usize, gens: &[Permutation]) -> Vec<Permutation> {
    let mut id = Permutation::identity(degree);
    if !gens.is_empty() && gens.iter().all(|g| g.tag.is_some()) {
        id.tag = Some(0);
    }
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(id.images.clone());
    let mut elements = vec![id];
    let mut frontier = 0;
    while frontier < elements.len() {
        let x = elements[frontier].clone();
        frontier += 1;
        for g in gens {
            let y = x.then(g);
            if !seen.contains(&y.images) {
                seen.insert(y.images.clone());
                elements.push(y);
            }
        }
    }
    elements.sort();
    elements
}

impl PermGroup {
    /// Closes a generating set under composition.
    pub fn generate(degree: usize, generators: &[Permutation]) -> Result<PermGroup, PermError> {
        for g in generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let elements = closure_set(degree, generators);
        Ok(PermGroup { degree, generators: generators.to_vec(), elements })
    }

    /// Builds a group from a list of elements already known to be closed.
    /// A small generating set is chosen greedily in element order.
    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> PermGroup {
        elements.sort();
        elements.dedup();
        let mut generators: Vec<Permutation> = Vec::new();
        let mut covered: HashSet<Vec<u32>> = HashSet::new();
        covered.insert((0..degree as u32).collect());
        for e in &elements {
            if !covered.contains(&e.images) {
                generators.push(e.clone());
                covered = closure_set(degree, &generators).into_iter().map(|p| p.images).collect();
            }
            if covered.len() == elements.len() {
                break;
            }
        }
        debug_assert_eq!(covered.len(), elements.len(), "element list is not a group");
        PermGroup { degree, generators, elements }
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup { degree, generators: Vec::new(), elements: vec![Permutation::identity(degree)] }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn identity(&self) -> &Permutation {
        self.elements.iter().find(|e| e.is_identity()).expect("groups contain the identity")
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.elements.binary_search(g).ok()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.index_of(g).is_some()
    }

    /// Tagged copy of `g` as stored in the group.
    pub fn element(&self, g: &Permutation) -> Option<&Permutation> {
        self.index_of(g).map(|i| &self.elements[i])
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    /// Subgroup of elements satisfying a predicate closed under products.
    pub fn subgroup_where(&self, mut keep: impl FnMut(&Permutation) -> bool) -> PermGroup {
        let elems = self.elements.iter().filter(|g| keep(g)).cloned().collect();
        PermGroup::from_elements(self.degree, elems)
    }

    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[x] = true;
        let mut queue = VecDeque::from([x]);
        let mut out = vec![x];
        while let Some(y) = queue.pop_front() {
            for g in &self.generators {
                let z = g.image(y);
                if !seen[z] {
                    seen[z] = true;
                    out.push(z);
                    queue.push_back(z);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Orbits meeting `domain`, each sorted, listed by least element.
    pub fn orbits(&self, domain: &[usize]) -> Result<Vec<Vec<usize>>, PermError> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        let mut sorted = domain.to_vec();
        sorted.sort_unstable();
        for &x in &sorted {
            if x >= self.degree {
                return Err(PermError::PointOutOfRange { point: x, degree: self.degree });
            }
            if seen[x] {
                continue;
            }
            let orb = self.orbit(x);
            for &y in &orb {
                seen[y] = true;
            }
            out.push(orb);
        }
        out.sort();
        Ok(out)
    }

    pub fn all_orbits(&self) -> Vec<Vec<usize>> {
        self.orbits(&(0..self.degree).collect::<Vec<_>>()).expect("in range")
    }

    /// Orbit of a point set under the induced setwise action, each image sorted.
    pub fn set_orbit(&self, set: &[usize]) -> Vec<Vec<usize>> {
        let mut start = set.to_vec();
        start.sort_unstable();
        let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
        let mut out = vec![start.clone()];
        let mut queue = VecDeque::from([start]);
        while let Some(b) = queue.pop_front() {
            for g in &self.generators {
                let c = g.apply_set(&b);
                if seen.insert(c.clone()) {
                    out.push(c.clone());
                    queue.push_back(c);
                }
            }
        }
        out.sort();
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    pub fn stabilizer(&self, x: usize) -> PermGroup {
        self.subgroup_where(|g| g.image(x) == x)
    }

    pub fn pointwise_stabilizer(&self, points: &[usize]) -> PermGroup {
        self.subgroup_where(|g| points.iter().all(|&x| g.image(x) == x))
    }

    pub fn set_stabilizer(&self, set: &[usize]) -> PermGroup {
        let mut member = vec![false; self.degree];
        for &x in set {
            member[x] = true;
        }
        self.subgroup_where(|g| set.iter().all(|&x| member[g.image(x)]))
    }

    pub fn centralizer(&self, g: &Permutation) -> Result<PermGroup, PermError> {
        if !self.contains(g) {
            return Err(PermError::NotMember);
        }
        Ok(self.subgroup_where(|x| x.commutes_with(g)))
    }

    pub fn normalizer(&self, h: &PermGroup) -> Result<PermGroup, PermError> {
        if !h.is_subgroup_of(self) {
            return Err(PermError::NotSubgroup);
        }
        Ok(self.subgroup_where(|x| {
            let xi = x.inverse();
            h.generators.iter().all(|g| h.contains(&xi.then(g).then(x)))
        }))
    }

    pub fn center(&self) -> PermGroup {
        self.subgroup_where(|x| self.generators.iter().all(|g| x.commutes_with(g)))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && other.generators.iter().all(|x| {
                let xi = x.inverse();
                self.generators.iter().all(|g| self.contains(&xi.then(g).then(x)))
            })
    }

    /// Number of elements of each order.
    pub fn order_statistics(&self) -> BTreeMap<usize, usize> {
        let mut stats = BTreeMap::new();
        for g in &self.elements {
            *stats.entry(g.order()).or_insert(0) += 1;
        }
        stats
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements.iter().any(|g| g.order() == self.order())
    }

    /// Names the isomorphism type from order, commutativity and element-order
    /// counts. Only the small types that occur in this crate are recognized.
    pub fn structure_label(&self) -> Option<&'static str> {
        let n = self.order();
        if self.is_cyclic() {
            return Some(match n {
                1 => "1",
                2 => "Z2",
                3 => "Z3",
                6 => "Z6",
                7 => "Z7",
                9 => "Z9",
                _ => return None,
            });
        }
        let stats: Vec<(usize, usize)> = self.order_statistics().into_iter().collect();
        let label = match (n, stats.as_slice()) {
            (4, [(1, 1), (2, 3)]) => "E4",
            (6, [(1, 1), (2, 3), (3, 2)]) => "S3",
            (9, [(1, 1), (3, 8)]) => "E9",
            (12, [(1, 1), (2, 3), (3, 8)]) => "A4",
            (14, [(1, 1), (2, 7), (7, 6)]) => "D14",
            (18, [(1, 1), (2, 3), (3, 8), (6, 6)]) => "Z3xS3",
            (42, [(1, 1), (2, 7), (3, 14), (6, 14), (7, 6)]) if self.center().order() == 1 => "F42",
            _ => return None,
        };
        Some(label)
    }

    /// Transitivity is required; tests each pair {0, b} for a minimal block.
    pub fn primitivity(&self) -> Result<Primitivity, PermError> {
        let n = self.degree;
        if !self.is_transitive() {
            return Err(PermError::Intransitive { degree: n });
        }
        for b in 1..n {
            let blocks = minimal_block_system(n, &self.generators, 0, b);
            if blocks.len() > 1 {
                return Ok(Primitivity::Imprimitive { blocks });
            }
        }
        Ok(Primitivity::Primitive)
    }

    /// Classes of subgroups of prime order `p`, ordered by representative.
    pub fn prime_order_subgroup_classes(&self, p: usize) -> Vec<SubgroupClass> {
        // Each subgroup is keyed by the index of its least nonidentity element.
        let mut key_of: HashMap<usize, usize> = HashMap::new();
        for (i, g) in self.elements.iter().enumerate() {
            if g.order() != p || key_of.contains_key(&i) {
                continue;
            }
            let powers: Vec<usize> =
                (1..p).map(|e| self.index_of(&g.pow(e)).expect("closed")).collect();
            let key = *powers.iter().min().expect("p >= 2");
            for idx in powers {
                key_of.insert(idx, key);
            }
        }
        let mut keys: Vec<usize> = key_of.values().copied().collect();
        keys.sort_unstable();
        keys.dedup();
        let mut assigned: HashSet<usize> = HashSet::new();
        let mut classes = Vec::new();
        for &key in &keys {
            if assigned.contains(&key) {
                continue;
            }
            let rep = &self.elements[key];
            let mut members: HashSet<usize> = HashSet::new();
            for x in &self.elements {
                let c = rep.conjugate_by(x);
                let idx = self.index_of(&c).expect("closed");
                members.insert(key_of[&idx]);
            }
            assigned.extend(members.iter().copied());
            classes.push(SubgroupClass {
                representative: rep.clone(),
                size: members.len(),
                centralizer_order: self.elements.iter().filter(|x| x.commutes_with(rep)).count(),
            });
        }
        classes
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }
}

/// Finest block system in which `a` and `b` share a block.
pub fn minimal_block_system(n: usize, gens: &[Permutation], a: usize, b: usize) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(n);
    let mut queue = Vec::new();
    let (ra, rb) = (uf.find(a), uf.find(b));
    if ra != rb {
        uf.parent[rb] = ra;
        queue.push((a, b));
    }
    while let Some((x, y)) = queue.pop() {
        for g in gens {
            let (rx, ry) = (uf.find(g.image(x)), uf.find(g.image(y)));
            if rx != ry {
                uf.parent[ry] = rx;
                queue.push((rx, ry));
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..n {
        let r = uf.find(x);
        blocks.entry(r).or_default().push(x);
    }
    let mut out: Vec<Vec<usize>> = blocks.into_values().collect();
    out.sort();
    out
}

/// Text form: the degree on the first line, then one permutation per line as
/// space-separated 0-based images.
pub fn format_generators(degree: usize, gens: &[Permutation]) -> String {
    let mut out = format!("{degree}\n");
    for g in gens {
        let row: Vec<String> = g.images.iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

pub fn parse_generators(text: &str) -> Result<(usize, Vec<Permutation>), PermError> {
    let mut rows = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, first) = rows.next().ok_or(PermError::Parse { line: 1, message: "missing degree".into() })?;
    let degree: usize = first
        .trim()
        .parse()
        .map_err(|e| PermError::Parse { line: 1, message: format!("bad degree: {e}") })?;
    let mut gens = Vec::new();
    for (i, row) in rows {
        let images = row
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| PermError::Parse { line: i + 1, message: e.to_string() })?;
        if images.len() != degree {
            return Err(PermError::Parse {
                line: i + 1,
                message: format!("expected {degree} images, found {}", images.len()),
            });
        }
        let p = Permutation::new(images)
            .map_err(|e| PermError::Parse { line: i + 1, message: e.to_string() })?;
        gens.push(p);
    }
    Ok((degree, gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn cyclic(n: usize) -> PermGroup {
        let g = perm(&(0..n).map(|i| (i + 1) % n).collect::<Vec<_>>());
        PermGroup::generate(n, &[g]).unwrap()
    }

    fn symmetric(n: usize) -> PermGroup {
        let cyc = perm(&(0..n).map(|i| (i + 1) % n).collect::<Vec<_>>());
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(0, 1);
        PermGroup::generate(n, &[cyc, perm(&t)]).unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn composition_is_right_action() {
        let a = perm(&[1, 2, 0]);
        let b = perm(&[0, 2, 1]);
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.then(&b).image(0), 2);
        assert!(a.then(&a.inverse()).is_identity());
        assert_eq!(a.order(), 3);
        assert_eq!(a.pow(3), Permutation::identity(3));
    }

    #[test]
    fn tags_compose_modulo_three() {
        let a = perm(&[1, 0]).with_tag(2);
        let b = perm(&[1, 0]).with_tag(2);
        assert_eq!(a.then(&b).tag(), Some(1));
        assert_eq!(a.inverse().tag(), Some(1));
        assert_eq!(a.then(&perm(&[0, 1])).tag(), None);
    }

    #[test]
    fn closure_orders() {
        assert_eq!(PermGroup::generate(5, &[Permutation::identity(5)]).unwrap().order(), 1);
        assert_eq!(PermGroup::generate(5, &[]).unwrap().order(), 1);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(cyclic(6).order(), 6);
        let err = PermGroup::generate(3, &[perm(&[1, 0])]).unwrap_err();
        assert_eq!(err, PermError::DegreeMismatch { expected: 3, found: 2 });
    }

    #[test]
    fn elements_are_sorted_and_closed() {
        let g = symmetric(4);
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
        for a in g.elements() {
            assert!(g.contains(&a.inverse()));
            for b in g.elements() {
                assert!(g.contains(&a.then(b)));
            }
        }
    }

    #[test]
    fn from_elements_finds_generators() {
        let s4 = symmetric(4);
        let h = PermGroup::from_elements(4, s4.elements().to_vec());
        assert_eq!(h.order(), 24);
        assert!(h.generators().len() <= 3);
        assert_eq!(PermGroup::generate(4, h.generators()).unwrap().order(), 24);
    }

    #[test]
    fn orbits_and_stabilizers() {
        let g = PermGroup::generate(6, &[perm(&[1, 0, 2, 3, 4, 5]), perm(&[0, 1, 3, 4, 2, 5])]).unwrap();
        assert_eq!(g.all_orbits(), vec![vec![0, 1], vec![2, 3, 4], vec![5]]);
        for x in 0..6 {
            assert_eq!(g.orbit(x).len() * g.stabilizer(x).order(), g.order());
        }
        assert_eq!(g.set_stabilizer(&(0..6).collect::<Vec<_>>()).order(), g.order());
        assert_eq!(g.set_stabilizer(&[0, 1, 5]).order(), 6);
        assert_eq!(g.set_stabilizer(&[2]).order(), 2);
        assert!(g.orbits(&[7]).is_err());
    }

    #[test]
    fn cyclic_four_is_imprimitive() {
        match cyclic(4).primitivity().unwrap() {
            Primitivity::Imprimitive { blocks } => {
                assert!(blocks.iter().all(|b| b.len() == 2));
                assert_eq!(blocks, vec![vec![0, 2], vec![1, 3]]);
            }
            Primitivity::Primitive => panic!("Z4 is imprimitive"),
        }
        assert!(cyclic(5).primitivity().unwrap().is_primitive());
        assert!(symmetric(4).primitivity().unwrap().is_primitive());
        let intrans = PermGroup::generate(3, &[perm(&[1, 0, 2])]).unwrap();
        assert!(matches!(intrans.primitivity(), Err(PermError::Intransitive { .. })));
    }

    #[test]
    fn regular_z6_blocks_have_size_two_or_three() {
        // brute force: every nontrivial block of the regular Z6 action
        let z6 = cyclic(6);
        let mut sizes = HashSet::new();
        for mask in 1u32..63 {
            let set: Vec<usize> = (0..6).filter(|i| mask >> i & 1 == 1).collect();
            if set.len() < 2 {
                continue;
            }
            let is_block = z6.elements().iter().all(|g| {
                let img = g.apply_set(&set);
                img == set || img.iter().all(|x| !set.contains(x))
            });
            if is_block {
                sizes.insert(set.len());
            }
        }
        assert_eq!(sizes, HashSet::from([2, 3]));
        match z6.primitivity().unwrap() {
            Primitivity::Imprimitive { blocks } => assert!(sizes.contains(&blocks[0].len())),
            _ => panic!(),
        }
    }

    #[test]
    fn centralizer_normalizer_center() {
        let s4 = symmetric(4);
        let c = perm(&[1, 2, 3, 0]);
        assert_eq!(s4.centralizer(&c).unwrap().order(), 4);
        let v4 = PermGroup::generate(4, &[perm(&[1, 0, 3, 2]), perm(&[2, 3, 0, 1])]).unwrap();
        assert_eq!(s4.normalizer(&v4).unwrap().order(), 24);
        assert!(v4.is_normal_in(&s4));
        assert_eq!(s4.center().order(), 1);
        assert_eq!(s4.centralizer(&Permutation::identity(4)).unwrap().order(), 24);
        let outsider = PermGroup::generate(4, &[perm(&[1, 0, 2, 3])]).unwrap();
        assert_eq!(outsider.centralizer(&c).unwrap_err(), PermError::NotMember);
        assert_eq!(outsider.normalizer(&v4).unwrap_err(), PermError::NotSubgroup);
    }

    #[test]
    fn structure_labels() {
        assert_eq!(symmetric(3).structure_label(), Some("S3"));
        assert_eq!(cyclic(6).structure_label(), Some("Z6"));
        let a4 = symmetric(4).subgroup_where(|g| {
            let inversions = (0..4)
                .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                .filter(|&(i, j)| g.image(i) > g.image(j))
                .count();
            inversions % 2 == 0
        });
        assert_eq!(a4.structure_label(), Some("A4"));
        assert_eq!(symmetric(4).structure_label(), None);
    }

    #[test]
    fn subgroup_classes_in_s4() {
        let s4 = symmetric(4);
        // transpositions and double transpositions
        let twos = s4.prime_order_subgroup_classes(2);
        assert_eq!(twos.len(), 2);
        let mut sizes: Vec<usize> = twos.iter().map(|c| c.size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 6]);
        let threes = s4.prime_order_subgroup_classes(3);
        assert_eq!(threes.len(), 1);
        assert_eq!(threes[0].size, 4);
        assert_eq!(threes[0].centralizer_order, 3);
        assert!(s4.prime_order_subgroup_classes(5).is_empty());
    }

    #[test]
    fn generator_text_roundtrip() {
        let gens = vec![perm(&[1, 2, 0, 3]), perm(&[0, 1, 3, 2])];
        let text = format_generators(4, &gens);
        assert_eq!(text, "4\n1 2 0 3\n0 1 3 2\n");
        let (deg, parsed) = parse_generators(&text).unwrap();
        assert_eq!(deg, 4);
        assert_eq!(parsed, gens);
        assert!(matches!(parse_generators("3\n0 1\n"), Err(PermError::Parse { line: 2, .. })));
        assert!(matches!(parse_generators("3\n0 0 1\n"), Err(PermError::Parse { .. })));
        assert!(matches!(parse_generators(""), Err(PermError::Parse { line: 1, .. })));
    }
}
