//! Parametric families of pairs and modules over the classical algebras,
//! generated rather than stored.

use std::sync::Arc;

use crate::error::Result;
use crate::rat::{int, Rat};
use crate::repkit::{named_rep, RepName};
use crate::rho::{ModuleSpec, SemisimpleAlg, Summand};
use crate::rootsys::{root_system, RootSystem, Series};

/// A formal sum of tensor products of factor representations plus a
/// trivial part; closed under tensor product across distinct factors.
#[derive(Clone, Debug, Default)]
pub struct Mod {
    terms: Vec<(u32, Vec<(usize, RepName)>)>,
    triv: u64,
}

impl Mod {
    pub fn triv(n: u64) -> Mod {
        Mod { terms: Vec::new(), triv: n }
    }

    pub fn rep(factor: usize, name: RepName) -> Mod {
        Mod { terms: vec![(1, vec![(factor, name)])], triv: 0 }
    }

    pub fn plus(mut self, o: &Mod) -> Mod {
        self.terms.extend(o.terms.iter().cloned());
        self.triv += o.triv;
        self
    }

    pub fn times(mut self, k: u32) -> Mod {
        for t in &mut self.terms {
            t.0 *= k;
        }
        self.triv *= k as u64;
        self
    }

    /// Tensor product; the two sides must involve disjoint factors.
    pub fn tensor(&self, o: &Mod) -> Mod {
        let mut out = Mod::triv(self.triv * o.triv);
        for (m, a) in &self.terms {
            for (n, b) in &o.terms {
                let mut reps = a.clone();
                reps.extend(b.iter().cloned());
                reps.sort_by_key(|(i, _)| *i);
                out.terms.push((m * n, reps));
            }
            if o.triv > 0 {
                out.terms.push((*m * o.triv as u32, a.clone()));
            }
        }
        if self.triv > 0 {
            for (n, b) in &o.terms {
                out.terms.push((*n * self.triv as u32, b.clone()));
            }
        }
        out
    }

    pub fn dual(&self, factors: &[Arc<RootSystem>]) -> Mod {
        let terms = self
            .terms
            .iter()
            .map(|(m, reps)| {
                let reps = reps
                    .iter()
                    .map(|(i, r)| {
                        let rs = &factors[*i];
                        let hw = named_rep(rs, r).expect("family reps are valid").0;
                        let hw = hw.as_slice();
                        if rs.dual_labels(hw) == hw {
                            (*i, r.clone())
                        } else {
                            (*i, dual_name(r))
                        }
                    })
                    .collect();
                (*m, reps)
            })
            .collect();
        Mod { terms, triv: self.triv }
    }

    pub fn dim(&self, factors: &[Arc<RootSystem>]) -> u64 {
        self.triv
            + self
                .terms
                .iter()
                .map(|(m, reps)| {
                    *m as u64
                        * reps
                            .iter()
                            .map(|(i, r)| {
                                crate::repkit::dimension(&factors[*i], &named_rep(&factors[*i], r).unwrap())
                            })
                            .product::<u64>()
                })
                .sum::<u64>()
    }

    /// Collapses equal terms.
    pub fn into_spec(self) -> ModuleSpec {
        let mut summands: Vec<Summand> = Vec::new();
        for (m, reps) in self.terms {
            if let Some(s) = summands.iter_mut().find(|s| s.reps == reps) {
                s.mult += m;
            } else {
                summands.push(Summand { mult: m, reps, plus_dual: false });
            }
        }
        ModuleSpec { summands, trivial: self.triv }
    }
}

fn dual_name(r: &RepName) -> RepName {
    match r {
        RepName::Dual(inner) => (**inner).clone(),
        other => RepName::Dual(Box::new(other.clone())),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classical {
    Sl(usize),
    So(usize),
    Sp(usize),
}

impl Classical {
    pub fn name(&self) -> String {
        match self {
            Classical::Sl(n) => format!("sl({n})"),
            Classical::So(n) => format!("so({n})"),
            Classical::Sp(n) => format!("sp({n})"),
        }
    }

    pub fn dim(&self) -> usize {
        match *self {
            Classical::Sl(n) => n * n - 1,
            Classical::So(n) => n * (n - 1) / 2,
            Classical::Sp(n) => n * (2 * n + 1),
        }
    }
}

/// Collects simple factors while realizing classical algebras.
#[derive(Default)]
pub struct Builder {
    pub factors: Vec<(Series, usize)>,
}

impl Builder {
    fn push(&mut self, s: Series, r: usize) -> usize {
        self.factors.push((s, r));
        self.factors.len() - 1
    }

    /// Adds the simple factors of a classical algebra and returns its
    /// standard representation as a module of those factors. `so(1)`,
    /// `so(2)` and `sl(1)` contribute no factors.
    pub fn classical(&mut self, c: Classical) -> Mod {
        match c {
            Classical::Sl(1) => Mod::triv(1),
            Classical::Sl(n) => Mod::rep(self.push(Series::A, n - 1), RepName::Std),
            Classical::So(n) if n <= 2 => Mod::triv(n as u64),
            Classical::So(3) => Mod::rep(self.push(Series::A, 1), RepName::Sym(2)),
            Classical::So(4) => {
                let a = self.push(Series::A, 1);
                let b = self.push(Series::A, 1);
                Mod::rep(a, RepName::Std).tensor(&Mod::rep(b, RepName::Std))
            }
            Classical::So(n) if n % 2 == 1 => Mod::rep(self.push(Series::B, n / 2), RepName::Std),
            Classical::So(n) => Mod::rep(self.push(Series::D, n / 2), RepName::Std),
            Classical::Sp(1) => Mod::rep(self.push(Series::A, 1), RepName::Std),
            Classical::Sp(n) => Mod::rep(self.push(Series::C, n), RepName::Std),
        }
    }

    pub fn alg(&self) -> Result<SemisimpleAlg> {
        SemisimpleAlg::new(&self.factors)
    }

    pub fn root_systems(&self) -> Vec<Arc<RootSystem>> {
        self.factors.iter().map(|&(s, r)| root_system(s, r).unwrap()).collect()
    }
}

/// A pair `g ⊃ h` with `q = g/h` as an `h`-module and its expected verdict.
#[derive(Clone, Debug)]
pub struct PairCase {
    pub id: String,
    pub g: String,
    pub h: SemisimpleAlg,
    pub q: ModuleSpec,
    pub dim_g: usize,
    pub expected_tempered: bool,
    pub cite: String,
}

/// A module `V` of `h` with the expectation `rho_h <= k rho_V` (i.e. `p_V <= k`).
#[derive(Clone, Debug)]
pub struct ModuleCase {
    pub id: String,
    pub h: SemisimpleAlg,
    pub v: ModuleSpec,
    pub k: Rat,
    pub expected_holds: bool,
    pub cite: String,
}

/// `g ⊃ h` for block-diagonal `h = ⊕ g(n_i)` inside `g(n)` with `g` one of
/// `sl`, `so`, `sp`; `blocks` may leave part of the space unused.
pub fn block_pair(kind: fn(usize) -> Classical, n: usize, blocks: &[usize]) -> Option<(SemisimpleAlg, ModuleSpec)> {
    let used: usize = blocks.iter().sum();
    if used > n {
        return None;
    }
    let mut b = Builder::default();
    let mut vs: Vec<Mod> = blocks.iter().map(|&k| b.classical(kind(k))).collect();
    if b.factors.is_empty() {
        return None;
    }
    let fs = b.root_systems();
    let rest = n - used;
    let q = match kind(1) {
        Classical::Sl(_) => {
            vs.extend((0..rest).map(|_| Mod::triv(1)));
            let mut q = Mod::triv(vs.len() as u64 - 1);
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    let t = vs[i].tensor(&vs[j].dual(&fs));
                    q = q.plus(&t.dual(&fs)).plus(&t);
                }
            }
            q
        }
        Classical::So(_) => {
            let so2 = blocks.iter().filter(|&&k| k == 2).count() as u64;
            vs.push(Mod::triv(rest as u64));
            let mut q = Mod::triv(so2 + (rest * rest.saturating_sub(1) / 2) as u64);
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    q = q.plus(&vs[i].tensor(&vs[j]));
                }
            }
            q
        }
        Classical::Sp(_) => {
            vs.push(Mod::triv(2 * rest as u64));
            let mut q = Mod::triv((rest * (2 * rest + 1)) as u64);
            for i in 0..vs.len() {
                for j in i + 1..vs.len() {
                    q = q.plus(&vs[i].tensor(&vs[j]));
                }
            }
            q
        }
    };
    Some((b.alg().ok()?, q.into_spec()))
}

fn sl(n: usize) -> Classical {
    Classical::Sl(n)
}
fn so(n: usize) -> Classical {
    Classical::So(n)
}
fn sp(n: usize) -> Classical {
    Classical::Sp(n)
}

fn blocks_name(kind: fn(usize) -> Classical, blocks: &[usize]) -> String {
    blocks.iter().map(|&k| kind(k).name()).collect::<Vec<_>>().join("+")
}

/// Expected verdict for block-diagonal subalgebras (largest block first).
pub fn block_expected(kind: fn(usize) -> Classical, n: usize, blocks: &[usize]) -> bool {
    let n1 = blocks[0];
    let fails = match kind(1) {
        Classical::Sl(_) => 2 * n1 >= n + 2,
        Classical::So(_) => 2 * n1 >= n + 3,
        Classical::Sp(_) => 2 * n1 > n || (blocks.len() >= 2 && n == 2 * n1 && n == 2 * blocks[1]),
    };
    !fails
}

/// Nonincreasing tuples with parts in `min..=max`, total at most `cap`, length at most `len`.
pub fn partitions(min: usize, max: usize, cap: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(min: usize, max: usize, cap: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if cur.len() == len {
            return;
        }
        let hi = cur.last().copied().unwrap_or(max).min(max).min(cap);
        for k in (min..=hi).rev() {
            cur.push(k);
            go(min, max, cap - k, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(min, max, cap, len, &mut Vec::new(), &mut out);
    out
}

fn push_block_case(
    out: &mut Vec<PairCase>,
    prefix: &str,
    kind: fn(usize) -> Classical,
    n: usize,
    blocks: &[usize],
    expected: bool,
    cite: &str,
) {
    if let Some((h, q)) = block_pair(kind, n, blocks) {
        let g = kind(n);
        out.push(PairCase {
            id: format!("{prefix}/{}>{}", g.name(), blocks_name(kind, blocks)),
            g: g.name(),
            h,
            q,
            dim_g: g.dim(),
            expected_tempered: expected,
            cite: cite.to_string(),
        });
    }
}

/// Classical rows of the non-tempered classification, swept up to `bound`.
pub fn classical_table(bound: usize) -> Vec<PairCase> {
    let mut out = Vec::new();
    let cite = "classification for classical g";
    // A1: sl(p+q) ⊃ sl(p) + h2, h2 ⊂ sl(q) block-diagonal, p >= q+2.
    for p in 3..=bound {
        for q in 1..=p - 2 {
            for h2 in partitions(2, q, q, q) {
                let mut blocks = vec![p];
                blocks.extend(&h2);
                push_block_case(&mut out, "A1", sl, p + q, &blocks, false, cite);
            }
        }
    }
    // A2: sl(2p) ⊃ sp(p).
    for p in 2..=bound {
        let h = SemisimpleAlg::simple(Series::C, p).unwrap();
        out.push(PairCase {
            id: format!("A2/sl({})>sp({p})", 2 * p),
            g: format!("sl({})", 2 * p),
            h,
            q: ModuleSpec::irreducible(0, RepName::Ext0(2)),
            dim_g: sl(2 * p).dim(),
            expected_tempered: false,
            cite: cite.into(),
        });
    }
    // BD1: so(p+q) ⊃ so(p) + h2, h2 ⊂ so(q), p >= q+3; so(p+2) ⊃ so(p).
    for p in 4..=bound {
        for q in 1..=p - 3 {
            for h2 in partitions(3, q, q, q) {
                let mut blocks = vec![p];
                blocks.extend(&h2);
                if h2.is_empty() && q > 1 {
                    blocks.push(q);
                }
                push_block_case(&mut out, "BD1", so, p + q, &blocks, false, cite);
            }
        }
        if p >= 5 {
            push_block_case(&mut out, "BD1", so, p + 2, &[p], false, cite);
        }
    }
    // D2: so(2p) ⊃ sl(p).
    for p in 3..=bound {
        let h = SemisimpleAlg::simple(Series::A, p - 1).unwrap();
        let mut q = ModuleSpec::trivial(1);
        q.push(1, vec![(0, RepName::Ext(2))], true);
        out.push(PairCase {
            id: format!("D2/so({})>sl({p})", 2 * p),
            g: format!("so({})", 2 * p),
            h,
            q,
            dim_g: so(2 * p).dim(),
            expected_tempered: false,
            cite: cite.into(),
        });
    }
    // C1: sp(p+q) ⊃ sp(p) + h2, h2 ⊂ sp(q), p >= q+1.
    for p in 2..=bound {
        for q in 1..p {
            for h2 in partitions(1, q, q, q) {
                let mut blocks = vec![p];
                blocks.extend(&h2);
                push_block_case(&mut out, "C1", sp, p + q, &blocks, false, cite);
            }
        }
    }
    // C2: sp(2p) ⊃ sp(p) + sp(p).
    for p in 1..=bound {
        push_block_case(&mut out, "C2", sp, 2 * p, &[p, p], false, cite);
    }
    out
}

/// Block-diagonal subalgebras of sl/so/sp with at most three blocks of
/// size at most `max_block` inside `g(n)`, `n <= max_n`.
pub fn block_sweep(max_block: usize, max_n: usize) -> Vec<PairCase> {
    let mut out = Vec::new();
    let cite = "block-diagonal subalgebras of classical g";
    for (kind, prefix) in [(sl as fn(usize) -> Classical, "sl-blocks"), (so, "so-blocks"), (sp, "sp-blocks")] {
        for blocks in partitions(1, max_block, max_n, 3) {
            if blocks.is_empty() {
                continue;
            }
            let used: usize = blocks.iter().sum();
            for n in used.max(2)..=max_n {
                if blocks == [n] {
                    continue;
                }
                let exp = block_expected(kind, n, &blocks);
                push_block_case(&mut out, prefix, kind, n, &blocks, exp, cite);
            }
        }
    }
    out
}

/// Symmetric pairs with `h` maximal: `g(p+q) ⊃ g(p) + g(q)` and the four
/// further classical families, for parameters up to `bound`.
pub fn symmetric_pairs(bound: usize) -> Vec<PairCase> {
    let mut out = Vec::new();
    let cite = "classical symmetric pairs";
    for p in 1..=bound {
        for q in 1..=p {
            let d = p - q;
            push_block_case(&mut out, "sym-sl", sl, p + q, &[p, q], d < 2, cite);
            push_block_case(&mut out, "sym-so", so, p + q, &[p, q], d < 3, cite);
            push_block_case(&mut out, "sym-sp", sp, p + q, &[p, q], false, cite);
        }
    }
    for p in 1..=bound {
        // sl(p) ⊃ so(p): q = S^2_0 C^p.
        if p >= 3 {
            let mut b = Builder::default();
            b.classical(so(p));
            let q = match p {
                3 => ModuleSpec::irreducible(0, RepName::Sym(4)),
                4 => ModuleSpec {
                    summands: vec![Summand {
                        mult: 1,
                        reps: vec![(0, RepName::Sym(2)), (1, RepName::Sym(2))],
                        plus_dual: false,
                    }],
                    trivial: 0,
                },
                _ => ModuleSpec::irreducible(0, RepName::Sym0(2)),
            };
            out.push(PairCase {
                id: format!("sym-slso/sl({p})>so({p})"),
                g: format!("sl({p})"),
                h: b.alg().unwrap(),
                q,
                dim_g: sl(p).dim(),
                expected_tempered: true,
                cite: cite.into(),
            });
        }
        // sl(2p) ⊃ sp(p): q = Λ^2_0.
        if p >= 2 {
            out.push(PairCase {
                id: format!("sym-slsp/sl({})>sp({p})", 2 * p),
                g: format!("sl({})", 2 * p),
                h: SemisimpleAlg::simple(Series::C, p).unwrap(),
                q: ModuleSpec::irreducible(0, RepName::Ext0(2)),
                dim_g: sl(2 * p).dim(),
                expected_tempered: false,
                cite: cite.into(),
            });
        }
        // so(2p) ⊃ sl(p): q = C + (Λ^2 + dual); sp(p) ⊃ sl(p): q = C + (S^2 + dual).
        if p >= 2 {
            let h = SemisimpleAlg::simple(Series::A, p - 1).unwrap();
            let mut qo = ModuleSpec::trivial(1);
            if p == 2 {
                qo.trivial += 2;
            } else {
                qo.push(1, vec![(0, RepName::Ext(2))], true);
            }
            out.push(PairCase {
                id: format!("sym-sosl/so({})>sl({p})", 2 * p),
                g: format!("so({})", 2 * p),
                h: h.clone(),
                q: qo,
                dim_g: so(2 * p).dim(),
                expected_tempered: false,
                cite: cite.into(),
            });
            let mut qs = ModuleSpec::trivial(1);
            qs.push(1, vec![(0, RepName::Sym(2))], true);
            out.push(PairCase {
                id: format!("sym-spsl/sp({p})>sl({p})"),
                g: format!("sp({p})"),
                h,
                q: qs,
                dim_g: sp(p).dim(),
                expected_tempered: true,
                cite: cite.into(),
            });
        }
    }
    out
}

/// Adjoint, `S^2_0` and `Λ^2_0` of a realized classical block.
fn block_pieces(b: &mut Builder, c: Classical) -> (Mod, Mod, Mod) {
    let start = b.factors.len();
    b.classical(c);
    let idx: Vec<usize> = (start..b.factors.len()).collect();
    let rep = |i: usize, r: RepName| Mod::rep(idx[i], r);
    match c {
        Classical::Sl(n) => {
            let adj = rep(0, RepName::Adjoint);
            let s2 = rep(0, RepName::Sym(2));
            let l2 = if n == 2 { Mod::triv(1) } else { rep(0, RepName::Ext(2)) };
            (adj, s2, l2)
        }
        Classical::So(3) => (rep(0, RepName::Sym(2)), rep(0, RepName::Sym(4)), Mod::default()),
        Classical::So(4) => (
            rep(0, RepName::Sym(2)).plus(&rep(1, RepName::Sym(2))),
            rep(0, RepName::Sym(2)).tensor(&rep(1, RepName::Sym(2))),
            Mod::default(),
        ),
        Classical::So(n) if n <= 2 => (
            Mod::triv((n * (n - 1) / 2) as u64),
            Mod::triv((n * (n + 1) / 2 - 1) as u64),
            Mod::default(),
        ),
        Classical::So(_) => (rep(0, RepName::Adjoint), rep(0, RepName::Sym0(2)), Mod::default()),
        Classical::Sp(1) => (rep(0, RepName::Sym(2)), Mod::default(), Mod::default()),
        Classical::Sp(_) => (rep(0, RepName::Adjoint), Mod::default(), rep(0, RepName::Ext0(2))),
    }
}

/// Tensor-product embeddings `sl(pq) ⊃ sl(p)+sl(q)` etc.; all tempered.
pub fn tensor_pairs(bound: usize, max_dim_q: u64) -> Vec<PairCase> {
    let mut out = Vec::new();
    let cite = "tensor-product subalgebras of classical g";
    let mut push = |id: String, g: Classical, b: Builder, q: Mod| {
        let fs = b.root_systems();
        if q.dim(&fs) > max_dim_q {
            return;
        }
        out.push(PairCase {
            id,
            g: g.name(),
            h: b.alg().unwrap(),
            q: q.into_spec(),
            dim_g: g.dim(),
            expected_tempered: true,
            cite: cite.into(),
        });
    };
    for p in 2..=bound {
        for q in 2..=p {
            let mut b = Builder::default();
            let (a1, _, _) = block_pieces(&mut b, sl(p));
            let (a2, _, _) = block_pieces(&mut b, sl(q));
            push(format!("ten-sl/sl({})>sl({p})+sl({q})", p * q), sl(p * q), b, a1.tensor(&a2));
        }
    }
    for p in 3..=bound {
        for q in 3..=p {
            let mut b = Builder::default();
            let (a1, s1, _) = block_pieces(&mut b, so(p));
            let (a2, s2, _) = block_pieces(&mut b, so(q));
            let v = a1.tensor(&s2).plus(&s1.tensor(&a2));
            push(format!("ten-so/so({})>so({p})+so({q})", p * q), so(p * q), b, v);
        }
    }
    for p in 1..=bound {
        for q in 2..=bound {
            let mut b = Builder::default();
            let (a1, _, l1) = block_pieces(&mut b, sp(p));
            let (a2, _, l2) = block_pieces(&mut b, sp(q));
            let v = a1.tensor(&l2).plus(&l1.tensor(&a2));
            push(format!("ten-spsp/so({})>sp({p})+sp({q})", 4 * p * q), so(4 * p * q), b, v);
        }
        for q in 3..=bound {
            let mut b = Builder::default();
            let (a1, _, l1) = block_pieces(&mut b, sp(p));
            let (a2, s2, _) = block_pieces(&mut b, so(q));
            let v = a1.tensor(&s2).plus(&l1.tensor(&a2));
            push(format!("ten-spso/sp({})>sp({p})+so({q})", p * q), sp(p * q), b, v);
        }
    }
    out
}

fn module_case(id: String, b: &Builder, v: Mod, k: i64, holds: bool, cite: &str) -> Option<ModuleCase> {
    let h = b.alg().ok()?;
    if h.factors.is_empty() {
        return None;
    }
    Some(ModuleCase { id, h, v: v.into_spec(), k: int(k), expected_holds: holds, cite: cite.into() })
}

/// Module forms of the two-block symmetric pairs.
pub fn two_block_modules(bound: usize) -> Vec<ModuleCase> {
    let cite = "two-block modules";
    let mut out = Vec::new();
    for p in 1..=bound {
        for q in 1..=p {
            let d = p - q;
            let mut b = Builder::default();
            let (v1, v2) = (b.classical(sl(p)), b.classical(sl(q)));
            out.extend(module_case(format!("sl/{p},{q}"), &b, v1.tensor(&v2), 2, d < 2, cite));
            let mut b = Builder::default();
            let (v1, v2) = (b.classical(so(p)), b.classical(so(q)));
            out.extend(module_case(format!("so/{p},{q}"), &b, v1.tensor(&v2), 1, d < 3, cite));
            let mut b = Builder::default();
            let (v1, v2) = (b.classical(sp(p)), b.classical(sp(q)));
            out.extend(module_case(format!("sp/{p},{q}"), &b, v1.tensor(&v2), 1, false, cite));
        }
    }
    out
}

/// Module forms of three-block subalgebras.
pub fn three_block_modules(bound: usize) -> Vec<ModuleCase> {
    let cite = "three-block modules";
    let mut out = Vec::new();
    for p in 1..=bound {
        for q in 1..=p {
            for r in 1..=q {
                let mut b = Builder::default();
                let (a, bb, c) = (b.classical(sl(p)), b.classical(sl(q)), b.classical(sl(r)));
                let fs = b.root_systems();
                let v = a.tensor(&bb.dual(&fs)).plus(&bb.tensor(&c.dual(&fs))).plus(&a.tensor(&c.dual(&fs)));
                out.extend(module_case(format!("sl/{p},{q},{r}"), &b, v, 2, p <= q + r + 1, cite));

                let mut b = Builder::default();
                let (a, bb, c) = (b.classical(so(p)), b.classical(so(q)), b.classical(so(r)));
                let v = a.tensor(&bb).plus(&bb.tensor(&c)).plus(&a.tensor(&c));
                out.extend(module_case(format!("so/{p},{q},{r}"), &b, v, 1, p <= q + r + 2, cite));

                let mut b = Builder::default();
                let (a, bb, c) = (b.classical(sp(p)), b.classical(sp(q)), b.classical(sp(r)));
                let v = a.tensor(&bb).plus(&bb.tensor(&c)).plus(&a.tensor(&c));
                out.extend(module_case(format!("sp/{p},{q},{r}"), &b, v, 1, p <= q + r, cite));
            }
        }
    }
    out
}

/// Module forms of the mixed two-block families.
pub fn mixed_block_modules(bound: usize) -> Vec<ModuleCase> {
    let cite = "mixed two-block modules";
    let mut out = Vec::new();
    for p in 1..=bound {
        for q in 1..=bound {
            // sp(p)+sl(q) on Λ^2_0 C^2p + (C^2p ⊗ C^q + dual).
            let mut b = Builder::default();
            let (_, _, l2) = block_pieces(&mut b, sp(p));
            let v1 = Mod::rep(0, RepName::Std);
            let v2 = b.classical(sl(q));
            let fs = b.root_systems();
            let t = v1.tensor(&v2);
            let v = l2.plus(&t).plus(&t.dual(&fs));
            out.extend(module_case(format!("spsl/{p},{q}"), &b, v, 1, q < 2 * p + 2, cite));

            if p == 1 {
                continue;
            }
            // sl(p)+so(q) on Λ^2 C^p + C^p ⊗ C^q.
            let mut b = Builder::default();
            let (_, _, l2) = block_pieces(&mut b, sl(p));
            let v1 = Mod::rep(0, RepName::Std);
            let v2 = b.classical(so(q));
            out.extend(module_case(format!("slso/{p},{q}"), &b, l2.plus(&v1.tensor(&v2)), 2, q < 2 * p + 3, cite));

            // sl(p)+sp(q) on S^2 C^p + C^p ⊗ C^2q.
            let mut b = Builder::default();
            let (_, s2, _) = block_pieces(&mut b, sl(p));
            let v1 = Mod::rep(0, RepName::Std);
            let v2 = b.classical(sp(q));
            out.extend(module_case(format!("slsp/{p},{q}"), &b, s2.plus(&v1.tensor(&v2)), 2, q < p + 1, cite));
        }
        if p >= 2 {
            let mut b = Builder::default();
            let (_, _, l2) = block_pieces(&mut b, sp(p));
            out.extend(module_case(format!("sp-l20/{p}"), &b, l2, 3, true, cite));
        }
    }
    out
}

/// `g2+so(q)` on `C^7 ⊗ (C + C^q)` and `so(7)+so(q)` on `C^8 ⊗ (C + C^q)`.
pub fn exceptional_block_modules(max_q: usize) -> Vec<ModuleCase> {
    let cite = "g2 and spin(7) blocks";
    let mut out = Vec::new();
    for q in 1..=max_q {
        let mut b = Builder::default();
        b.factors.push((Series::G, 2));
        let v7 = Mod::rep(0, RepName::Fund(1));
        let vq = Mod::triv(1).plus(&b.classical(so(q)));
        out.extend(module_case(format!("g2so/{q}"), &b, v7.tensor(&vq), 1, !(q == 1 || q >= 10), cite));

        let mut b = Builder::default();
        b.factors.push((Series::B, 3));
        let v8 = Mod::rep(0, RepName::Spin);
        let vq = Mod::triv(1).plus(&b.classical(so(q)));
        out.extend(module_case(format!("so7so/{q}"), &b, v8.tensor(&vq), 1, !(q <= 2 || q >= 11), cite));
    }
    out
}
