//! Fixtures shared by the benchmarks.

use temper_core::pairdb::parse_module_for;
use temper_core::{ModuleSpec, SemisimpleAlg};

/// (label, algebra, module) triples spanning small to large weight systems.
pub const PV_CASES: &[(&str, &str, &str)] = &[
    ("a1-std", "A1", "std@1"),
    ("c3-ext0-3", "C3", "ext0(3)@1"),
    ("g2-7", "G2", "fund(1)@1"),
    ("a1b5-spin", "A1+B5", "std@1 x spin@2"),
    ("e6-27", "E6", "fund(1)@1 +dual"),
    ("e7-56", "E7", "fund(7)@1"),
    ("d8-halfspin", "D8", "halfspin_plus@1"),
];

pub fn fixture(alg: &str, rep: &str) -> (SemisimpleAlg, ModuleSpec) {
    let h: SemisimpleAlg = alg.parse().expect("fixture algebra parses");
    let v = parse_module_for(rep, &h).expect("fixture module parses");
    (h, v)
}
