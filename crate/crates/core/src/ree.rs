//! PΓL₂(8) ≅ ²G₂(3) acting on the 36 secants of the conic.
//!
//! The conic is parametrized by the projective line GF(8) ∪ {∞}, so every
//! semilinear map `t ↦ (a·t^(2^e) + b) / (c·t^(2^e) + d)` permutes the 9 conic
//! points and hence the 36 secants (unordered pairs of conic points). The
//! model closes the secant permutations of four generators, then picks out
//! the distinguished elements γ, η, σ, the subgroups K, C_G(γ), ⟨η, σ⟩ and the
//! conic points F, W, W^σ, P by a deterministic recipe.
//!
//! `cg_eta` is the group written C_G(η) in the orbit lemma: ⟨η, σ⟩ ≅ S₃, which
//! equals C_{G′}(γ). The full centralizer of η in G is larger (order 27, it
//! contains γ), see [`ReeModel::eta_full_centralizer_order`].

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::field::{gf8, FieldElement};
use crate::geometry::{ConicModel, LinePoint, Plane, Triple};
use crate::perm::{PermError, PermGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReeError {
    #[error("singular matrix: ad + bc = 0")]
    Singular,
    #[error("inconsistent construction: {0}")]
    Consistency(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

fn check(cond: bool, what: &str) -> Result<(), ReeError> {
    if cond {
        Ok(())
    } else {
        Err(ReeError::Consistency(what.to_string()))
    }
}

/// `t ↦ (a·t^(2^e) + b) / (c·t^(2^e) + d)` on GF(8) ∪ {∞}.
///
/// The matrix is normalized so its first nonzero entry is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemilinearMap {
    /// `[a, b, c, d]`.
    pub matrix: [FieldElement; 4],
    pub frob_exp: u8,
}

fn mat_mul(x: [FieldElement; 4], y: [FieldElement; 4]) -> [FieldElement; 4] {
    let f = gf8();
    let [a, b, c, d] = x;
    let [p, q, r, s] = y;
    [
        f.add(f.mul(a, p), f.mul(b, r)),
        f.add(f.mul(a, q), f.mul(b, s)),
        f.add(f.mul(c, p), f.mul(d, r)),
        f.add(f.mul(c, q), f.mul(d, s)),
    ]
}

impl SemilinearMap {
    pub fn new(matrix: [FieldElement; 4], frob_exp: u8) -> Result<Self, ReeError> {
        let f = gf8();
        let [a, b, c, d] = matrix;
        if f.add(f.mul(a, d), f.mul(b, c)).is_zero() {
            return Err(ReeError::Singular);
        }
        let lead = matrix.iter().copied().find(|x| !x.is_zero()).expect("nonsingular");
        let s = f.inv(lead).expect("nonzero");
        Ok(SemilinearMap { matrix: matrix.map(|x| f.mul(x, s)), frob_exp: frob_exp % 3 })
    }

    pub fn identity() -> Self {
        let (o, z) = (FieldElement::ONE, FieldElement::ZERO);
        SemilinearMap { matrix: [o, z, z, o], frob_exp: 0 }
    }

    /// The pure field automorphism `t ↦ t²`.
    pub fn frobenius() -> Self {
        SemilinearMap { frob_exp: 1, ..Self::identity() }
    }

    /// Every element of PΓL₂(8), 504 matrices times 3 Frobenius powers.
    pub fn all() -> Vec<SemilinearMap> {
        let f = gf8();
        let mut out = HashSet::new();
        for a in f.elements() {
            for b in f.elements() {
                for c in f.elements() {
                    for d in f.elements() {
                        for e in 0..3 {
                            if let Ok(m) = SemilinearMap::new([a, b, c, d], e) {
                                out.insert(m);
                            }
                        }
                    }
                }
            }
        }
        let mut v: Vec<_> = out.into_iter().collect();
        v.sort();
        v
    }

    pub fn apply(&self, t: LinePoint) -> LinePoint {
        let f = gf8();
        let [a, b, c, d] = self.matrix;
        let (x, s) = match t {
            LinePoint::Finite(t) => (f.frobenius_pow(t, self.frob_exp as u32), FieldElement::ONE),
            LinePoint::Infinity => (FieldElement::ONE, FieldElement::ZERO),
        };
        let num = f.add(f.mul(a, x), f.mul(b, s));
        let den = f.add(f.mul(c, x), f.mul(d, s));
        if den.is_zero() {
            LinePoint::Infinity
        } else {
            LinePoint::Finite(f.div(num, den).expect("nonzero"))
        }
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &SemilinearMap) -> SemilinearMap {
        let f = gf8();
        let twisted = self.matrix.map(|x| f.frobenius_pow(x, other.frob_exp as u32));
        SemilinearMap::new(mat_mul(other.matrix, twisted), self.frob_exp + other.frob_exp)
            .expect("product of nonsingular maps")
    }

    /// The induced collineation of PG(2,8) preserving x₁² = x₀x₂, as a
    /// linear part applied after the coordinatewise Frobenius.
    pub fn plane_matrix(&self) -> [[FieldElement; 3]; 3] {
        let f = gf8();
        let [a, b, c, d] = self.matrix;
        let sq = |x| f.mul(x, x);
        let z = FieldElement::ZERO;
        [
            [sq(d), z, sq(c)],
            [f.mul(b, d), f.add(f.mul(a, d), f.mul(b, c)), f.mul(a, c)],
            [sq(b), z, sq(a)],
        ]
    }

    pub fn apply_to_plane(&self, x: Triple) -> Triple {
        let f = gf8();
        let x = x.map(|c| f.frobenius_pow(c, self.frob_exp as u32));
        let m = self.plane_matrix();
        let row = |r: [FieldElement; 3]| {
            (0..3).fold(FieldElement::ZERO, |acc, i| f.add(acc, f.mul(r[i], x[i])))
        };
        [row(m[0]), row(m[1]), row(m[2])]
    }
}

/// Names of the nine conic points relative to the distinguished elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConicName {
    F,
    W,
    WSigma,
    P,
    PGamma,
    PGamma2,
    PSigma,
    PSigmaGamma,
    PSigmaGamma2,
}

impl ConicName {
    pub const ALL: [ConicName; 9] = [
        ConicName::F,
        ConicName::W,
        ConicName::WSigma,
        ConicName::P,
        ConicName::PGamma,
        ConicName::PGamma2,
        ConicName::PSigma,
        ConicName::PSigmaGamma,
        ConicName::PSigmaGamma2,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ConicName::F => "F",
            ConicName::W => "W",
            ConicName::WSigma => "W^σ",
            ConicName::P => "P",
            ConicName::PGamma => "P^γ",
            ConicName::PGamma2 => "P^γ²",
            ConicName::PSigma => "P^σ",
            ConicName::PSigmaGamma => "P^σγ",
            ConicName::PSigmaGamma2 => "P^σγ²",
        }
    }
}

/// Outcome of locating σ as a collineation: its fixed points should be exactly
/// the tangent FN and its center the point W^σW ∩ FN.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElationCheck {
    pub axis: usize,
    pub center: usize,
    pub fixed_points_are_axis: bool,
    pub lines_through_center_fixed: bool,
    pub axis_is_tangent: bool,
    pub center_off_conic: bool,
}

impl ElationCheck {
    pub fn holds(&self) -> bool {
        self.fixed_points_are_axis
            && self.lines_through_center_fixed
            && self.axis_is_tangent
            && self.center_off_conic
    }
}

/// An orbit with a representative secant named by its two conic points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledOrbit {
    pub label: String,
    pub representative: usize,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct OrbitTable {
    pub group: &'static str,
    pub group_order: usize,
    pub orbits: Vec<LabeledOrbit>,
}

impl OrbitTable {
    pub fn lengths(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.orbits.iter().map(|o| o.members.len()).collect();
        v.sort_unstable();
        v
    }

    pub fn orbit_of(&self, secant: usize) -> &LabeledOrbit {
        self.orbits.iter().find(|o| o.members.contains(&secant)).expect("orbits partition the secants")
    }
}

#[derive(Debug, Clone)]
pub struct UredReport {
    pub cg_gamma: OrbitTable,
    pub cg_eta: OrbitTable,
    pub k: OrbitTable,
    pub checks: Vec<(String, bool)>,
}

impl UredReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// G ≅ PΓL₂(8) on the secants with its distinguished elements located.
#[derive(Debug, Clone)]
pub struct ReeModel {
    pub conic: ConicModel,
    /// The full group, degree 36, order 1512.
    pub g: PermGroup,
    /// G′ ≅ PSL₂(8), the Frobenius-exponent-0 part, order 504.
    pub gder: PermGroup,
    pub gamma: Permutation,
    pub eta: Permutation,
    pub sigma: Permutation,
    /// K = ⟨γ, σ⟩ ≅ Z₆.
    pub k: PermGroup,
    /// C_G(γ) ≅ Z₃ × S₃.
    pub cg_gamma: PermGroup,
    /// ⟨η, σ⟩ = C_{G′}(γ) ≅ S₃.
    pub cg_eta: PermGroup,
    /// Conic positions (indices into `conic.conic_points`) by name.
    names: [usize; 9],
    /// `secant_pairs[s]`: conic positions of the two points on secant `s`.
    secant_pairs: Vec<(usize, usize)>,
    /// `pair_secant[i][j]`: the secant through conic positions `i` and `j`.
    pair_secant: Vec<Vec<usize>>,
    maps: HashMap<Permutation, SemilinearMap>,
}

impl ReeModel {
    pub fn build() -> Result<ReeModel, ReeError> {
        Self::from_conic(ConicModel::build(Plane::build()))
    }

    pub fn from_conic(conic: ConicModel) -> Result<ReeModel, ReeError> {
        let secant_pairs: Vec<(usize, usize)> = conic
            .secant_pairs
            .iter()
            .map(|&(p, q)| (conic.conic_position(p).unwrap(), conic.conic_position(q).unwrap()))
            .collect();
        let mut pair_secant = vec![vec![usize::MAX; 9]; 9];
        for (s, &(i, j)) in secant_pairs.iter().enumerate() {
            pair_secant[i][j] = s;
            pair_secant[j][i] = s;
        }

        let f = gf8();
        let (o, z, w) = (FieldElement::ONE, FieldElement::ZERO, f.generator());
        let gen_maps = [
            SemilinearMap::new([o, o, z, o], 0)?,
            SemilinearMap::new([w, z, z, o], 0)?,
            SemilinearMap::new([z, o, o, z], 0)?,
            SemilinearMap::frobenius(),
        ];
        let lift = |m: &SemilinearMap| -> Permutation {
            let conic_img: Vec<usize> = conic
                .params
                .iter()
                .map(|&t| conic.conic_position(conic.point_of_param(m.apply(t))).unwrap())
                .collect();
            let images = secant_pairs.iter().map(|&(i, j)| pair_secant[conic_img[i]][conic_img[j]]).collect();
            Permutation::new(images).expect("pair action is a bijection").with_tag(m.frob_exp)
        };
        let gens: Vec<Permutation> = gen_maps.iter().map(lift).collect();

        // The pair action must agree with moving the secant lines themselves.
        for (m, g) in gen_maps.iter().zip(&gens) {
            for (s, &line) in conic.secants.iter().enumerate() {
                let pts = &conic.plane.lines[line].points;
                let img: Vec<usize> = pts[..2]
                    .iter()
                    .map(|&p| conic.plane.point_index(m.apply_to_plane(conic.plane.points[p].coords)))
                    .collect::<Result<_, _>>()
                    .map_err(|e| ReeError::Consistency(e.to_string()))?;
                let image_line = conic.plane.join(img[0], img[1]).expect("distinct");
                check(
                    conic.secants[g.image(s)] == image_line,
                    "coordinate action disagrees with the conic-pair action",
                )?;
            }
        }

        let g = PermGroup::generate(36, &gens)?;
        let gder = PermGroup::generate(36, &gens[..3])?;
        check(g.order() == 1512, "|G| = 1512")?;
        check(gder.order() == 504, "|G'| = 504")?;

        let mut maps = HashMap::new();
        for m in SemilinearMap::all() {
            maps.insert(lift(&m), m);
        }
        check(maps.len() == 1512, "the 1512 semilinear maps act faithfully on secants")?;
        check(maps.keys().all(|p| g.contains(p)), "every semilinear map lies in the closure")?;
        check(
            g.elements().iter().all(|p| p.tag() == Some(maps[p].frob_exp)),
            "closure tags agree with Frobenius exponents",
        )?;
        check(
            gder.elements().iter().all(|p| maps[p].frob_exp == 0),
            "G' is the Frobenius-exponent-0 part",
        )?;
        check(g.is_transitive(), "G transitive on secants")?;

        let gamma = g.element(&lift(&SemilinearMap::frobenius())).expect("in G").clone();
        let cg_gamma = g.centralizer(&gamma)?;
        let eta = cg_gamma
            .elements()
            .iter()
            .find(|x| x.order() == 3 && gder.contains(x))
            .ok_or_else(|| ReeError::Consistency("no order-3 element of C_G(γ) ∩ G'".into()))?
            .clone();
        let sigma = cg_gamma
            .elements()
            .iter()
            .find(|x| x.order() == 2)
            .ok_or_else(|| ReeError::Consistency("no involution in C_G(γ)".into()))?
            .clone();
        let cg_eta = PermGroup::generate(36, &[eta.clone(), sigma.clone()])?;
        let k = PermGroup::generate(36, &[gamma.clone(), sigma.clone()])?;

        let mut model = ReeModel {
            conic,
            g,
            gder,
            gamma,
            eta,
            sigma,
            k,
            cg_gamma,
            cg_eta,
            names: [0; 9],
            secant_pairs,
            pair_secant,
            maps,
        };
        model.locate_points()?;
        model.verify_structure()?;
        Ok(model)
    }

    fn locate_points(&mut self) -> Result<(), ReeError> {
        let gamma_fixed: Vec<usize> = (0..9).filter(|&i| self.conic_image(&self.gamma, i) == i).collect();
        check(gamma_fixed.len() == 3, "γ fixes exactly 3 conic points")?;
        let k_fixed: Vec<usize> = (0..9)
            .filter(|&i| self.k.generators().iter().all(|x| self.conic_image(x, i) == i))
            .collect();
        check(k_fixed.len() == 1, "K fixes exactly one conic point")?;
        let f_pos = k_fixed[0];
        let w_pos = *gamma_fixed.iter().find(|&&i| i != f_pos).expect("three fixed points");
        let ws_pos = self.conic_image(&self.sigma, w_pos);
        check(ws_pos != w_pos && gamma_fixed.contains(&ws_pos), "σ swaps W and W^σ")?;
        let p_pos = (0..9).find(|i| !gamma_fixed.contains(i)).expect("six non-fixed points");
        let img = |g: &Permutation, i| self.conic_image(g, i);
        let pg = img(&self.gamma, p_pos);
        let pg2 = img(&self.gamma, pg);
        let ps = img(&self.sigma, p_pos);
        let psg = img(&self.gamma, ps);
        let psg2 = img(&self.gamma, psg);
        self.names = [f_pos, w_pos, ws_pos, p_pos, pg, pg2, ps, psg, psg2];
        let distinct: HashSet<usize> = self.names.iter().copied().collect();
        check(distinct.len() == 9, "the nine named conic points are distinct")
    }

    fn verify_structure(&self) -> Result<(), ReeError> {
        check(self.g.primitivity()?.is_primitive(), "G primitive on secants")?;
        check(self.eta.order() == 3 && self.gder.contains(&self.eta), "η has order 3 and lies in G'")?;
        check(self.gamma.order() == 3 && !self.gder.contains(&self.gamma), "γ has order 3 outside G'")?;
        check(self.sigma.order() == 2, "σ is an involution")?;
        check(self.cg_gamma.order() == 18, "|C_G(γ)| = 18")?;
        check(self.cg_gamma.structure_label() == Some("Z3xS3"), "C_G(γ) ≅ Z3 × S3")?;
        check(self.cg_eta.structure_label() == Some("S3"), "⟨η, σ⟩ ≅ S3")?;
        check(self.k.structure_label() == Some("Z6"), "K ≅ Z6")?;
        let gamma_group = PermGroup::generate(36, std::slice::from_ref(&self.gamma))?;
        let direct = self.cg_eta.is_subgroup_of(&self.cg_gamma)
            && gamma_group.order() * self.cg_eta.order() == self.cg_gamma.order()
            && gamma_group.elements().iter().filter(|x| self.cg_eta.contains(x)).count() == 1
            && self.cg_eta.is_normal_in(&self.cg_gamma);
        check(direct, "C_G(γ) = ⟨γ⟩ × ⟨η, σ⟩")?;
        check(self.g.normalizer(&self.k)?.order() == 6, "K is self-normalizing")?;
        check(
            (0..9).all(|i| self.conic_image(&self.eta, i) != i),
            "η fixes no conic point",
        )?;
        check(self.eta.fixed_points().is_empty(), "η fixes no secant")?;
        check(!self.named_positions(&[ConicName::F, ConicName::W, ConicName::WSigma]).contains(&self.name(ConicName::P)), "P ∉ {F, W, W^σ}")?;
        Ok(())
    }

    /// Image of a conic position under a group element, read off from the
    /// images of two secants through the point.
    pub fn conic_image(&self, g: &Permutation, i: usize) -> usize {
        let (j1, j2) = match i {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let a = self.secant_pairs[g.image(self.pair_secant[i][j1])];
        let b = self.secant_pairs[g.image(self.pair_secant[i][j2])];
        if a.0 == b.0 || a.0 == b.1 {
            a.0
        } else {
            a.1
        }
    }

    /// The action on the nine conic positions.
    pub fn conic_permutation(&self, g: &Permutation) -> Permutation {
        Permutation::new((0..9).map(|i| self.conic_image(g, i)).collect()).expect("bijection")
    }

    pub fn semilinear_of(&self, g: &Permutation) -> Option<&SemilinearMap> {
        self.maps.get(g)
    }

    /// Conic position of a named point.
    pub fn name(&self, n: ConicName) -> usize {
        self.names[n as usize]
    }

    fn named_positions(&self, ns: &[ConicName]) -> Vec<usize> {
        ns.iter().map(|&n| self.name(n)).collect()
    }

    /// Plane index of a named point.
    pub fn named_point(&self, n: ConicName) -> usize {
        self.conic.conic_points[self.name(n)]
    }

    pub fn name_of_position(&self, i: usize) -> ConicName {
        ConicName::ALL[self.names.iter().position(|&p| p == i).expect("all positions named")]
    }

    /// Conic positions `(i, j)` with `i < j` on secant `s`.
    pub fn secant_pair(&self, s: usize) -> (usize, usize) {
        self.secant_pairs[s]
    }

    pub fn secant(&self, a: ConicName, b: ConicName) -> usize {
        self.pair_secant[self.name(a)][self.name(b)]
    }

    /// Label such as `PP^γ` for a secant, endpoints in [`ConicName`] order.
    pub fn secant_label(&self, s: usize) -> String {
        let (i, j) = self.secant_pairs[s];
        let (mut a, mut b) = (self.name_of_position(i), self.name_of_position(j));
        if b < a {
            std::mem::swap(&mut a, &mut b);
        }
        format!("{}{}", a.label(), b.label())
    }

    pub fn secant_orbit(&self, h: &PermGroup, s: usize) -> Vec<usize> {
        h.orbit(s)
    }

    /// Order of the full centralizer of η in G (27, not the 6 of ⟨η, σ⟩).
    pub fn eta_full_centralizer_order(&self) -> usize {
        self.g.centralizer(&self.eta).expect("η ∈ G").order()
    }

    /// Stabilizer of a secant in G (≅ F₄₂).
    pub fn secant_stabilizer(&self, s: usize) -> PermGroup {
        self.g.stabilizer(s)
    }

    /// Orbit lengths of G_s on the secants, sorted.
    pub fn subdegrees(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.secant_stabilizer(0).all_orbits().iter().map(Vec::len).collect();
        lens.sort_unstable();
        lens
    }

    /// Number of distinct images of an ordered triple of conic points.
    pub fn ordered_triple_orbit_size(&self) -> usize {
        let images: HashSet<(usize, usize, usize)> = self
            .g
            .elements()
            .iter()
            .map(|x| (self.conic_image(x, 0), self.conic_image(x, 1), self.conic_image(x, 2)))
            .collect();
        images.len()
    }

    /// Locates σ as a collineation of the plane and compares it with an
    /// elation of axis FN and center W^σW ∩ FN.
    pub fn elation_check(&self) -> ElationCheck {
        let plane = &self.conic.plane;
        let map = self.maps[&self.sigma];
        let image_point =
            |p: usize| plane.point_index(map.apply_to_plane(plane.points[p].coords)).expect("nonzero");
        let image_line = |l: usize| {
            let pts = &plane.lines[l].points;
            plane.join(image_point(pts[0]), image_point(pts[1])).expect("distinct")
        };
        let f = self.named_point(ConicName::F);
        let axis = plane.join(f, self.conic.nucleus).expect("N is off the conic");
        let ww = plane
            .join(self.named_point(ConicName::W), self.named_point(ConicName::WSigma))
            .expect("distinct");
        let center = plane.meet(ww, axis).expect("distinct lines");
        let fixed: Vec<usize> = (0..plane.points.len()).filter(|&p| image_point(p) == p).collect();
        ElationCheck {
            axis,
            center,
            fixed_points_are_axis: fixed == plane.lines[axis].points,
            lines_through_center_fixed: plane.lines_through[center].iter().all(|&l| image_line(l) == l),
            axis_is_tangent: self.conic.tangents.contains(&axis),
            center_off_conic: !self.conic.is_conic_point(center),
        }
    }

    fn table(&self, group: &'static str, h: &PermGroup, named: &[(ConicName, ConicName)]) -> OrbitTable {
        let named_secants: Vec<usize> = named.iter().map(|&(a, b)| self.secant(a, b)).collect();
        let orbits = h
            .all_orbits()
            .into_iter()
            .map(|members| {
                let (rep, label) = match named
                    .iter()
                    .zip(&named_secants)
                    .find(|(_, s)| members.contains(s))
                {
                    Some((&(a, b), &s)) => (s, format!("{}{}", a.label(), b.label())),
                    None => (members[0], self.secant_label(members[0])),
                };
                LabeledOrbit { label, representative: rep, members }
            })
            .collect();
        OrbitTable { group, group_order: h.order(), orbits }
    }

    /// The orbit decompositions of the secants under C_G(γ), ⟨η, σ⟩ and K,
    /// with the claimed properties evaluated.
    pub fn ured_orbits(&self) -> UredReport {
        use ConicName::*;
        let cg_gamma = self.table("C_G(γ)", &self.cg_gamma, &[(P, PGamma), (F, W), (F, P), (P, PSigma)]);
        let cg_eta =
            self.table("C_G(η)", &self.cg_eta, &[(P, PGamma), (F, P), (F, PGamma), (F, PGamma2)]);
        let k_named = [(WSigma, W), (W, F), (PSigma, P), (P, F), (P, W), (PSigma, W), (PGamma, P), (PGamma, PSigma)];
        let k = self.table("K", &self.k, &k_named);

        let mut checks = Vec::new();
        let sixes = |t: &OrbitTable| -> Vec<Vec<usize>> {
            t.orbits.iter().filter(|o| o.members.len() == 6).map(|o| o.members.clone()).collect()
        };
        let orbit_set = |h: &PermGroup, a, b| {
            let mut v = h.orbit(self.secant(a, b));
            v.sort_unstable();
            v
        };
        let same_sets = |mut a: Vec<Vec<usize>>, mut b: Vec<Vec<usize>>| {
            a.sort();
            b.sort();
            a == b
        };

        let g6 = sixes(&cg_gamma);
        checks.push((
            "(PP^γ)^{C_G(γ)} is the unique C_G(γ)-orbit of length 6".to_string(),
            g6 == vec![orbit_set(&self.cg_gamma, P, PGamma)],
        ));
        let rep_lengths: Vec<usize> =
            [(F, W), (P, PGamma), (P, PSigma), (F, P)].iter().map(|&(a, b)| orbit_set(&self.cg_gamma, a, b).len()).collect();
        checks.push((
            "C_G(γ)-orbits of FW, PP^γ, PP^σ, FP have lengths 3, 6, 9, 18 and cover S".to_string(),
            rep_lengths == [3, 6, 9, 18] && cg_gamma.lengths() == [3, 6, 9, 18],
        ));
        let e6 = sixes(&cg_eta);
        let expected_e6: Vec<Vec<usize>> =
            [(P, PGamma), (F, P), (F, PGamma), (F, PGamma2)].iter().map(|&(a, b)| orbit_set(&self.cg_eta, a, b)).collect();
        checks.push((
            "(PP^γ)^{C_G(η)} and (FP^{γ^i})^{C_G(η)}, i=0,1,2, are exactly the C_G(η)-orbits of length 6".to_string(),
            e6.len() == 4 && same_sets(e6, expected_e6),
        ));
        let k6 = sixes(&k);
        let expected_k6: Vec<Vec<usize>> = [(PGamma, P), (PGamma, PSigma), (P, W), (PSigma, W), (P, F)]
            .iter()
            .map(|&(a, b)| orbit_set(&self.k, a, b))
            .collect();
        checks.push((
            "(P^γP)^K, (P^γP^σ)^K, (PW)^K, (P^σW)^K, (PF)^K are exactly the K-orbits of length 6".to_string(),
            k6.len() == 5 && same_sets(k6, expected_k6),
        ));
        let k_lengths: Vec<usize> = k_named.iter().map(|&(a, b)| orbit_set(&self.k, a, b).len()).collect();
        let k_total: usize = k_lengths.iter().sum();
        checks.push((
            "K-orbits of W^σW, WF, P^σP, PF, PW, P^σW, P^γP, P^γP^σ have lengths 1, 2, 3, 6, 6, 6, 6, 6".to_string(),
            k_lengths == [1, 2, 3, 6, 6, 6, 6, 6] && k_total == 36 && k.lengths() == [1, 2, 3, 6, 6, 6, 6, 6],
        ));
        let a = orbit_set(&self.cg_gamma, P, PGamma);
        let b = orbit_set(&self.cg_eta, P, PGamma);
        let c = orbit_set(&self.k, PGamma, P);
        checks.push(("(PP^γ)^{C_G(γ)} = (PP^γ)^{C_G(η)} = (P^γP)^K".to_string(), a == b && b == c));

        UredReport { cg_gamma, cg_eta, k, checks }
    }

    /// B₁ = (PP^γ)^{C_G(γ)}, B₂ = (P^γP^σ)^K, B₃ = (PW)^K, B₄ = (P^σW)^K.
    pub fn base_blocks(&self) -> [Vec<usize>; 4] {
        use ConicName::*;
        [
            self.cg_gamma.orbit(self.secant(P, PGamma)),
            self.k.orbit(self.secant(PGamma, PSigma)),
            self.k.orbit(self.secant(P, W)),
            self.k.orbit(self.secant(PSigma, W)),
        ]
    }
}
