//! Fixtures shared by the benchmarks in `benches/`.

use std::collections::BTreeMap;
use std::sync::Arc;

use affwhit::engine::{Mode, WhittakerSpec};
use affwhit::scalar::int;
use affwhit::{BiSequence, Cocycle, RootDatum};

/// sl2 with Λ(a1) = a(2) at level 1.
pub fn sl2_spec() -> WhittakerSpec {
    let d = Arc::new(RootDatum::build(2, &[]).unwrap());
    let a1 = d.parse_root("a1").unwrap();
    let lam = BTreeMap::from([(a1, BiSequence::geometric(int(2)).unwrap())]);
    WhittakerSpec::new(d, lam, int(1), Mode::Affine, Cocycle::Standard).unwrap()
}

/// sl3 with the Borel parabolic, Λ = (a(2), a(3)) on the simple roots.
pub fn sl3_borel_spec() -> WhittakerSpec {
    let d = Arc::new(RootDatum::build(3, &[]).unwrap());
    let lam = BTreeMap::from([
        (d.parse_root("a1").unwrap(), BiSequence::geometric(int(2)).unwrap()),
        (d.parse_root("a2").unwrap(), BiSequence::geometric(int(3)).unwrap()),
    ]);
    WhittakerSpec::new(d, lam, int(1), Mode::Affine, Cocycle::Standard).unwrap()
}
