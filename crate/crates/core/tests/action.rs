//! Module action: representation property, normal form, Whittaker conditions.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::Arc;

use affwhit::affine::{AffineElement, AffineGenerator, Cocycle};
use affwhit::engine::{Mode, ModuleElement, PbwMonomial, Truncation, WhittakerSpec};
use affwhit::rootdata::{FinBasis, RootDatum};
use affwhit::scalar::{self, int};
use affwhit::seqspace::BiSequence;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn geo(j: i64) -> BiSequence {
    BiSequence::geometric(int(j)).unwrap()
}

fn build(n: usize, levi: &[usize], lambda: &[(&str, BiSequence)], theta: i64, mode: Mode) -> WhittakerSpec {
    let d = Arc::new(RootDatum::build(n, levi).unwrap());
    let lam: BTreeMap<_, _> = lambda.iter().map(|(l, s)| (d.parse_root(l).unwrap(), s.clone())).collect();
    WhittakerSpec::new(d, lam, int(theta), mode, Cocycle::Standard).unwrap()
}

fn presets() -> Vec<(&'static str, WhittakerSpec)> {
    vec![
        ("sl2", build(2, &[], &[("a1", geo(2))], 1, Mode::Affine)),
        ("sl3-borel", build(3, &[], &[("a1", geo(2)), ("a2", geo(3))], 1, Mode::Affine)),
        ("sl3-abelian", build(3, &[2], &[("a1", geo(2)), ("a1+a2", geo(3))], 1, Mode::Affine)),
        ("sl2-loop", build(2, &[], &[("a1", BiSequence::delta(1))], 0, Mode::LoopOnly)),
    ]
}

fn all_generators(spec: &WhittakerSpec, max_exp: i64) -> Vec<AffineGenerator> {
    let mut out = Vec::new();
    for x in spec.datum().basis() {
        for exp in -max_exp..=max_exp {
            out.push(AffineGenerator::Loop { x, exp });
        }
    }
    if spec.mode() == Mode::Affine {
        out.push(AffineGenerator::Central);
        out.push(AffineGenerator::Derivation);
    }
    out
}

fn random_element(basis: &[PbwMonomial], rng: &mut ChaCha8Rng) -> ModuleElement {
    ModuleElement::from_terms((0..rng.gen_range(1..=3)).map(|_| {
        (basis[rng.gen_range(0..basis.len())].clone(), scalar::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=2)))
    }))
}

fn assert_standard(spec: &WhittakerSpec, x: &ModuleElement) {
    for (m, _) in x.iter() {
        let f = spec.factors(m);
        for w in f.windows(2) {
            assert_eq!(spec.gen_order(w[0].0, w[1].0), Ok(Ordering::Less), "{}", spec.render_monomial(m));
        }
    }
}

#[test]
fn action_respects_the_bracket() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for (name, spec) in presets() {
        let gens = all_generators(&spec, 3);
        let basis = spec.basis_enumeration(&Truncation::new(2, 3, 0));
        for _ in 0..500 {
            let g = gens[rng.gen_range(0..gens.len())];
            let h = gens[rng.gen_range(0..gens.len())];
            let m = random_element(&basis, &mut rng);
            let gh = spec.act(g, &spec.act(h, &m).unwrap()).unwrap();
            let hg = spec.act(h, &spec.act(g, &m).unwrap()).unwrap();
            let br = spec.algebra().bracket(&AffineElement::generator(g), &AffineElement::generator(h));
            let rhs = spec.act_element(&br, &m).unwrap();
            assert_eq!(gh.sub(&hg), rhs, "{name}: [{g:?}, {h:?}]");
            assert_standard(&spec, &gh);
        }
    }
}

#[test]
fn cyclic_vector_is_whittaker() {
    for (_, spec) in presets() {
        let one = ModuleElement::cyclic();
        for &id in spec.datum().nilradical() {
            for j in -10..=10 {
                let g = AffineGenerator::Loop { x: FinBasis::Root(id), exp: j };
                let r = spec.act(g, &one).unwrap();
                if spec.datum().phi0().contains(&id) {
                    assert_eq!(r, one.scale(&spec.lambda()[&id].entry(j)));
                } else {
                    assert!(r.is_zero());
                }
            }
        }
    }
}

#[test]
fn sl3_borel_commutator_root_kills_cyclic_vector() {
    let spec = &presets()[1].1;
    let g = AffineGenerator::parse(spec.datum(), "X[a1+a2]@t^2").unwrap();
    assert!(spec.act(g, &ModuleElement::cyclic()).unwrap().is_zero());
}

#[test]
fn widening_the_window_never_adds_solutions() {
    for (name, spec) in presets() {
        for d in 0..=2 {
            let mut last = usize::MAX;
            for j in 0..=4 {
                let dim = spec.whittaker_solve(&Truncation::new(d, 1, j)).dimension;
                assert!(dim >= 1, "{name}");
                assert!(dim <= last, "{name}: D={d} J={j} dim {dim} > {last}");
                last = dim;
            }
        }
    }
}

#[test]
fn cyclic_vector_always_solves() {
    for (_, spec) in presets() {
        for d in 0..=2 {
            let r = spec.whittaker_solve(&Truncation::new(d, 1, 2));
            assert!(r.dimension >= 1);
            assert_eq!(r.basis[0], ModuleElement::cyclic());
        }
    }
}

#[test]
fn lowest_stratum_monomials_are_moved_by_some_condition() {
    let spec = &presets()[1].1;
    let datum = spec.datum();
    for label in ["-a1", "-a2", "-a1-a2"] {
        let id = datum.parse_root(label).unwrap();
        for exp in -2..=2 {
            let g = AffineGenerator::Loop { x: FinBasis::Root(id), exp };
            let omega = ModuleElement::monomial(spec.monomial(&[g]).unwrap());
            let moved = datum.phi0().iter().any(|&a| {
                (-3..=3).any(|j| {
                    let x = AffineGenerator::Loop { x: FinBasis::Root(a), exp: j };
                    let r = spec.act(x, &omega).unwrap().sub(&omega.scale(&spec.character(a, j)));
                    !r.is_zero()
                })
            });
            assert!(moved, "{label}@t^{exp}");
        }
    }
}

#[test]
fn leading_term_is_minimum() {
    let spec = &presets()[0].1;
    let basis = spec.basis_enumeration(&Truncation::new(2, 1, 0));
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..200 {
        let x = random_element(&basis, &mut rng);
        if x.is_zero() {
            continue;
        }
        let lt = spec.leading_term(&x).unwrap();
        assert!(x.iter().all(|(m, _)| lt <= *m));
        assert!(!x.coeff(&lt).is_zero());
    }
}
