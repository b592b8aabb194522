mod common;

use proptest::prelude::*;

use common::props::{self, Raw, ALGS, FIRST_SEMISIMPLE, N_COORDS, N_LABELS};
use temper_core::rat::{frac, int, Rat};
use temper_core::ratlp::{solve, LinProgram, LpOutcome, Relation};

fn raw(algs: std::ops::Range<usize>) -> impl Strategy<Value = Raw> {
    (
        algs,
        prop::collection::vec(0u8..3, N_LABELS),
        any::<u8>(),
        1u8..4,
        0u8..3,
        prop::collection::vec(-6i8..=6, N_COORDS),
        1u8..5,
    )
        .prop_map(|(alg, labels, mask, mult, dual_mult, coords, den)| Raw {
            alg,
            labels,
            mask,
            mult,
            dual_mult,
            coords,
            den,
        })
}

fn any_alg() -> impl Strategy<Value = Raw> {
    raw(0..ALGS.len())
}

fn semisimple() -> impl Strategy<Value = Raw> {
    raw(FIRST_SEMISIMPLE..ALGS.len())
}

macro_rules! exact_property {
    ($name:ident, $strategy:expr, $check:path) => {
        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]
            #[test]
            fn $name(r in $strategy) {
                let c = props::build(&r);
                if let Err(e) = $check(&c) {
                    prop_assert!(false, "{}", e);
                }
            }
        }
    };
}

exact_property!(dual_module_has_the_same_value, any_alg(), props::duality);
exact_property!(direct_sums_are_superadditive, any_alg(), props::superadditivity);
exact_property!(adding_a_summand_never_raises_the_value, semisimple(), props::monotonicity);
exact_property!(rho_is_weyl_invariant, any_alg(), props::weyl_invariance);
exact_property!(rho_is_even, any_alg(), props::evenness);
exact_property!(rho_is_midpoint_convex, any_alg(), props::midpoint_convexity);
exact_property!(sampled_ratios_bound_the_minimum, any_alg(), props::sampling_lower_bound);

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn multiples_scale_the_value(r in any_alg()) {
        let c = props::build(&r);
        if let Err(e) = props::scaling(&c, r.mult, r.dual_mult) {
            prop_assert!(false, "{}", e);
        }
    }
}

/// A bounded program over `n` nonnegative variables with a known feasible
/// point `x0`: box constraints, random `<=` rows with slack at `x0`, and
/// `>=` / `=` rows tight or slack at `x0`.
#[derive(Clone, Debug)]
struct RandomLp {
    n: usize,
    objective: Vec<i8>,
    x0: Vec<(u8, u8)>,
    rows: Vec<(Vec<i8>, u8, u8)>,
}

fn random_lp() -> impl Strategy<Value = RandomLp> {
    (1usize..5).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(-5i8..=5, n),
            prop::collection::vec((0u8..6, 1u8..4), n),
            prop::collection::vec((prop::collection::vec(-4i8..=4, n), 0u8..3, 0u8..3), 0..5),
        )
            .prop_map(|(n, objective, x0, rows)| RandomLp { n, objective, x0, rows })
    })
}

impl RandomLp {
    fn build(&self) -> (LinProgram, Vec<Rat>) {
        let n = self.n;
        let x0: Vec<Rat> = self.x0.iter().map(|&(a, d)| frac(a as i64, d as i64)).collect();
        let mut lp =
            LinProgram::new(n).minimize(self.objective.iter().map(|&c| int(c as i64)).collect()).nonnegative(0..n);
        for i in 0..n {
            let mut e = vec![int(0); n];
            e[i] = int(1);
            lp.constrain(e, Relation::Le, int(6));
        }
        for (coeffs, kind, slack) in &self.rows {
            let a: Vec<Rat> = coeffs.iter().map(|&c| int(c as i64)).collect();
            let at: Rat = a.iter().zip(&x0).map(|(p, q)| p * q).sum();
            let s = int(*slack as i64);
            match kind {
                0 => lp.constrain(a, Relation::Le, at + s),
                1 => lp.constrain(a, Relation::Ge, at - s),
                _ => lp.constrain(a, Relation::Eq, at),
            }
        }
        (lp, x0)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn bounded_programs_satisfy_strong_duality(p in random_lp()) {
        let (lp, x0) = p.build();
        prop_assert!(lp.is_feasible(&x0));
        let LpOutcome::Optimal(s) = solve(&lp).unwrap() else {
            return Err(TestCaseError::fail("bounded feasible program not solved to optimality"));
        };
        prop_assert!(lp.is_feasible(&s.point));
        prop_assert!(lp.is_dual_feasible(&s.dual));
        let primal: Rat = lp.objective.iter().zip(&s.point).map(|(c, x)| c * x).sum();
        prop_assert_eq!(&primal, &s.value);
        prop_assert_eq!(lp.dual_objective(&s.dual), s.value.clone());
        let at_x0: Rat = lp.objective.iter().zip(&x0).map(|(c, x)| c * x).sum();
        prop_assert!(s.value <= at_x0);
    }
}

#[test]
fn infeasible_and_unbounded_programs() {
    let mut lp = LinProgram::new(1).minimize(vec![int(1)]).nonnegative([0]);
    lp.constrain(vec![int(1)], Relation::Ge, int(2));
    lp.constrain(vec![int(1)], Relation::Le, int(1));
    assert_eq!(solve(&lp).unwrap(), LpOutcome::Infeasible);

    let lp = LinProgram::new(2).minimize(vec![int(-1), int(0)]).nonnegative([0, 1]);
    assert_eq!(solve(&lp).unwrap(), LpOutcome::Unbounded);

    // A free variable pinned by an equality.
    let mut lp = LinProgram::new(1).minimize(vec![int(3)]);
    lp.constrain(vec![int(2)], Relation::Eq, int(-5));
    let s = solve(&lp).unwrap().optimal().unwrap();
    assert_eq!(s.point, vec![frac(-5, 2)]);
    assert_eq!(s.value, frac(-15, 2));
}
