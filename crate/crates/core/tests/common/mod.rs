//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use std::sync::LazyLock;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use secant_designs::design::{orbit_design, Design};
use secant_designs::field::BinaryField;
use secant_designs::iso::{automorphism_group, canonical_form};
use secant_designs::perm::{PermGroup, Permutation};
use secant_designs::ree::ReeModel;

pub static MODEL: LazyLock<ReeModel> = LazyLock::new(|| ReeModel::build().expect("model builds"));

pub static DESIGNS: LazyLock<Vec<Design>> =
    LazyLock::new(|| MODEL.base_blocks().iter().map(|b| orbit_design(&MODEL.g, b).unwrap()).collect());

pub fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::new(images).unwrap()
}

/// Field axioms over every pair and triple of elements.
pub fn field_axioms_exhaustive(f: &BinaryField) -> Result<usize, String> {
    let els: Vec<_> = f.elements().collect();
    let (zero, one) = (els[0], els[1]);
    let mut checked = 0;
    for &a in &els {
        if f.add(a, zero) != a || f.mul(a, one) != a || f.add(a, a) != zero {
            return Err(format!("identity laws fail at {a}"));
        }
        if !a.is_zero() && f.mul(a, f.inv(a).unwrap()) != one {
            return Err(format!("inverse fails at {a}"));
        }
        for &b in &els {
            if f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a) {
                return Err(format!("commutativity fails at {a},{b}"));
            }
            for &c in &els {
                checked += 1;
                if f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))
                    || f.add(f.add(a, b), c) != f.add(a, f.add(b, c))
                    || f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))
                {
                    return Err(format!("associativity or distributivity fails at {a},{b},{c}"));
                }
            }
        }
    }
    Ok(checked)
}

/// Every subgroup the model and the designs materialize, with a name.
pub fn materialized_subgroups() -> Vec<(String, PermGroup)> {
    let m = &*MODEL;
    let mut out = vec![
        ("G".to_string(), m.g.clone()),
        ("G'".to_string(), m.gder.clone()),
        ("K".to_string(), m.k.clone()),
        ("C_G(γ)".to_string(), m.cg_gamma.clone()),
        ("⟨η,σ⟩".to_string(), m.cg_eta.clone()),
        ("C_G(η)".to_string(), m.g.centralizer(&m.eta).unwrap()),
    ];
    for s in 0..36 {
        out.push((format!("G_{s}"), m.g.stabilizer(s)));
        out.push((format!("G'_{s}"), m.gder.stabilizer(s)));
    }
    for (i, d) in DESIGNS.iter().enumerate() {
        out.push((format!("G_B{}", i + 1), m.g.set_stabilizer(&d.blocks()[0])));
        let aut = automorphism_group(d).unwrap().group.unwrap();
        out.push((format!("Aut(D{})", i + 1), aut));
    }
    out
}

/// |H| = |x^H|·|H_x| for every materialized subgroup H and every point x.
pub fn orbit_stabilizer_all() -> Result<usize, String> {
    let groups = materialized_subgroups();
    for (name, h) in &groups {
        for x in 0..h.degree() {
            let (o, s) = (h.orbit(x).len(), h.stabilizer(x).order());
            if o * s != h.order() {
                return Err(format!("{name}, point {x}: {o}·{s} ≠ {}", h.order()));
            }
        }
    }
    Ok(groups.len())
}

/// Certificates of `per_design` seeded random relabelings of each design
/// all equal the design's own certificate.
pub fn relabeling_invariance(per_design: usize, seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (i, d) in DESIGNS.iter().enumerate() {
        let cert = canonical_form(d).certificate;
        for t in 0..per_design {
            let p = random_permutation(d.v(), &mut rng);
            if canonical_form(&d.relabel(&p)).certificate != cert {
                return Err(format!("D{} relabeling {t} changes the certificate", i + 1));
            }
        }
    }
    Ok(())
}
