//! Executable law suite for any [`Ccdc`] model.
//!
//! Each law is checked on `cases` random instances drawn through a
//! [`Sampler`]. Random morphisms are closed under composition and product
//! pairing up to the configured depth. Laws with a hypothesis (for example
//! "if these two maps are summable") only count the draws where the
//! hypothesis holds. The first failing instance is kept as a counterexample.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::derived::{self as dv, Res};
use super::{Ccdc, CcdcError, Sampler};

#[derive(Clone, Debug)]
pub struct LawConfig {
    pub cases: usize,
    pub closure_depth: usize,
    pub seed: u64,
    /// Draws allowed per counted case for laws with a hypothesis.
    pub patience: usize,
}

impl Default for LawConfig {
    fn default() -> Self {
        LawConfig { cases: 100, closure_depth: 2, seed: 0, patience: 20 }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum LawFamily {
    Summability,
    Differential,
    Monad,
    Reformulated,
    Cartesian,
    Multilinear,
}

impl LawFamily {
    pub const ALL: [LawFamily; 6] = [
        LawFamily::Summability,
        LawFamily::Differential,
        LawFamily::Monad,
        LawFamily::Reformulated,
        LawFamily::Cartesian,
        LawFamily::Multilinear,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub note: String,
    pub dumps: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawOutcome {
    pub name: String,
    pub cases: usize,
    pub counterexample: Option<Counterexample>,
}

impl LawOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawReport {
    pub outcomes: Vec<LawOutcome>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(LawOutcome::passed)
    }

    pub fn get(&self, name: &str) -> Option<&LawOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }

    pub fn merge(mut self, other: LawReport) -> LawReport {
        self.outcomes.extend(other.outcomes);
        self
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawOutcome> {
        self.outcomes.iter().filter(|o| !o.passed())
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            let status = if o.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "LAW {} {} cases={}", o.name, status, o.cases)?;
            if let Some(c) = &o.counterexample {
                writeln!(f, "  counterexample: {}", c.note)?;
                for d in &c.dumps {
                    writeln!(f, "    {d}")?;
                }
            }
        }
        Ok(())
    }
}

enum Verdict {
    Skip,
    Pass,
    Fail(Counterexample),
}

fn fail(note: impl Into<String>, dumps: Vec<String>) -> Verdict {
    Verdict::Fail(Counterexample { note: note.into(), dumps })
}

struct Env<'a, I: Ccdc, S> {
    inst: &'a I,
    sampler: &'a mut S,
    rng: ChaCha8Rng,
    depth: usize,
}

impl<I: Ccdc, S: Sampler<I>> Env<'_, I, S> {
    fn object(&mut self) -> I::Object {
        self.sampler.object()
    }

    fn arbitrary(&mut self, dom: &I::Object, cod: &I::Object) -> I::Morphism {
        let depth = self.depth;
        self.arbitrary_at(dom, cod, depth)
    }

    fn arbitrary_at(&mut self, dom: &I::Object, cod: &I::Object, depth: usize) -> I::Morphism {
        if depth > 0 {
            match self.rng.gen_range(0..3) {
                0 => {
                    let mid = self.object();
                    let f = self.arbitrary_at(dom, &mid, depth - 1);
                    let g = self.arbitrary_at(&mid, cod, depth - 1);
                    if let Ok(h) = self.inst.compose(&g, &f) {
                        return h;
                    }
                }
                1 => {
                    if let Some((c0, c1)) = self.inst.factors(cod) {
                        let f0 = self.arbitrary_at(dom, &c0, depth - 1);
                        let f1 = self.arbitrary_at(dom, &c1, depth - 1);
                        if let Ok(h) = self.inst.prod_pair(&f0, &f1) {
                            return h;
                        }
                    }
                }
                _ => {}
            }
        }
        self.sampler.morphism(dom, cod)
    }

    fn small(&mut self, dom: &I::Object, cod: &I::Object) -> I::Morphism {
        self.sampler.small_morphism(dom, cod)
    }

    fn linear(&mut self, dom: &I::Object, cod: &I::Object) -> I::Morphism {
        self.sampler.multilinear(core::slice::from_ref(dom), cod)
    }

    fn eq(&self, what: &str, lhs: &I::Morphism, rhs: &I::Morphism) -> Option<Verdict> {
        if lhs == rhs {
            None
        } else {
            Some(fail(what, vec![format!("lhs = {lhs}"), format!("rhs = {rhs}")]))
        }
    }
}

/// Runs every law family.
pub fn check_axioms<I: Ccdc, S: Sampler<I>>(inst: &I, sampler: &mut S, config: &LawConfig) -> LawReport {
    check_families(inst, sampler, config, &LawFamily::ALL)
}

pub fn check_families<I: Ccdc, S: Sampler<I>>(
    inst: &I,
    sampler: &mut S,
    config: &LawConfig,
    families: &[LawFamily],
) -> LawReport {
    let mut env = Env {
        inst,
        sampler,
        rng: ChaCha8Rng::seed_from_u64(config.seed),
        depth: config.closure_depth,
    };
    let mut report = LawReport::default();
    for family in families {
        for (name, case) in laws_of::<I, S>(*family) {
            report.outcomes.push(run(&mut env, config, name, case));
        }
    }
    report
}

type Case<I, S> = for<'e, 'a> fn(&'e mut Env<'a, I, S>) -> Res<Verdict>;
type Law<I, S> = (&'static str, Case<I, S>);

fn run<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>, config: &LawConfig, name: &str, case: Case<I, S>) -> LawOutcome {
    let mut cases = 0;
    let mut draws = 0;
    let budget = config.cases * config.patience.max(1);
    while cases < config.cases && draws < budget {
        draws += 1;
        let verdict = match case(env) {
            Ok(v) => v,
            // Exceeding the degree cap says nothing about the law; redraw.
            Err(CcdcError::Degree(_)) => Verdict::Skip,
            Err(e) => fail(format!("model error: {e}"), Vec::new()),
        };
        match verdict {
            Verdict::Skip => {}
            Verdict::Pass => cases += 1,
            Verdict::Fail(c) => {
                return LawOutcome { name: name.to_string(), cases: cases + 1, counterexample: Some(c) };
            }
        }
    }
    LawOutcome { name: name.to_string(), cases, counterexample: None }
}

macro_rules! check {
    ($env:expr, $what:expr, $lhs:expr, $rhs:expr) => {
        if let Some(v) = $env.eq($what, &$lhs, &$rhs) {
            return Ok(v);
        }
    };
}

fn sum_or_fail<I: Ccdc>(inst: &I, f0: &I::Morphism, f1: &I::Morphism, bound: Option<&I::Morphism>) -> Res<Option<I::Morphism>> {
    match bound {
        Some(b) => dv::sum_under(inst, f0, f1, b),
        None => dv::sum(inst, f0, f1),
    }
}

// Summability structure.

fn law_d_com<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let x = env.object();
    let sigma = inst.sigma(&x);
    match inst.pair_witness_under(&inst.proj_d(1, &x), &inst.proj_d(0, &x), &sigma)? {
        None => return Ok(fail(format!("pi_1 and pi_0 not summable on {x}"), vec![])),
        Some(w) => check!(env, "sigma <pi_1, pi_0> = sigma", inst.compose(&sigma, &w)?, sigma),
    }
    let z = env.object();
    let f0 = env.small(&z, &x);
    let f1 = env.small(&z, &x);
    let a = dv::sum(inst, &f0, &f1)?;
    let b = dv::sum(inst, &f1, &f0)?;
    match (a, b) {
        (Some(a), Some(b)) => check!(env, "f0 + f1 = f1 + f0", a, b),
        (None, None) => return Ok(Verdict::Skip),
        _ => return Ok(fail("summability of f0, f1 is not symmetric", vec![format!("f0 = {f0}"), format!("f1 = {f1}")])),
    }
    Ok(Verdict::Pass)
}

fn law_d_zero<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let x = env.object();
    let id = inst.identity(&x);
    let zero = inst.zero(&x, &x);
    for (f0, f1, what) in [(&id, &zero, "id + 0 = id"), (&zero, &id, "0 + id = id")] {
        match dv::sum_under(inst, f0, f1, &id)? {
            Some(s) => check!(env, what, s, id),
            None => return Ok(fail(format!("{what}: not summable on {x}"), vec![])),
        }
    }
    let z = env.object();
    let f = env.arbitrary(&z, &x);
    let zero = inst.zero(&z, &x);
    match dv::sum_under(inst, &f, &zero, &f)? {
        Some(s) => check!(env, "f + 0 = f", s, f),
        None => return Ok(fail("f, 0 not summable", vec![format!("f = {f}")])),
    }
    Ok(Verdict::Pass)
}

fn law_d_witness<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let x = env.object();
    let dx = inst.d_object(&x);
    let z = env.object();
    let f = env.small(&z, &dx);
    let g = env.small(&z, &dx);
    let sigma = inst.sigma(&x);
    let sf = inst.compose(&sigma, &f)?;
    let sg = inst.compose(&sigma, &g)?;
    if inst.pair_witness(&sf, &sg)?.is_none() {
        return Ok(Verdict::Skip);
    }
    if inst.pair_witness(&f, &g)?.is_none() {
        return Ok(fail("sigma f, sigma g summable but f, g not", vec![format!("f = {f}"), format!("g = {g}")]));
    }
    Ok(Verdict::Pass)
}

fn law_sum_left_compatible<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let (x, y, z) = (env.object(), env.object(), env.object());
    let f0 = env.small(&y, &x);
    let f1 = env.small(&y, &x);
    let g = env.arbitrary(&z, &y);
    let Some(s) = dv::sum(inst, &f0, &f1)? else { return Ok(Verdict::Skip) };
    let sg = inst.compose(&s, &g)?;
    match dv::sum_under(inst, &inst.compose(&f0, &g)?, &inst.compose(&f1, &g)?, &sg)? {
        Some(t) => check!(env, "(f0 + f1) g = f0 g + f1 g", sg, t),
        None => return Ok(fail("f0 g, f1 g not summable", vec![format!("g = {g}")])),
    }
    Ok(Verdict::Pass)
}

fn law_sum_associative<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let (x, z) = (env.object(), env.object());
    let fs = [env.small(&z, &x), env.small(&z, &x), env.small(&z, &x)];
    let left = match dv::sum(inst, &fs[0], &fs[1])? {
        Some(a) => dv::sum(inst, &a, &fs[2])?,
        None => None,
    };
    let right = match dv::sum(inst, &fs[1], &fs[2])? {
        Some(b) => dv::sum(inst, &fs[0], &b)?,
        None => None,
    };
    match (left, right) {
        (Some(l), Some(r)) => check!(env, "(f0 + f1) + f2 = f0 + (f1 + f2)", l, r),
        (None, None) => return Ok(Verdict::Skip),
        _ => return Ok(fail("associativity of summability", fs.iter().map(|f| format!("{f}")).collect())),
    }
    Ok(Verdict::Pass)
}

fn law_structure_additive<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let x = env.object();
    for (h, what) in [(inst.proj_d(0, &x), "pi_0"), (inst.proj_d(1, &x), "pi_1"), (inst.sigma(&x), "sigma")] {
        if !dv::is_additive(inst, &h)? {
            return Ok(fail(format!("{what} is not additive on {x}"), vec![]));
        }
    }
    Ok(Verdict::Pass)
}

fn law_linear_closure<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let (x, y, z) = (env.object(), env.object(), env.object());
    let h1 = env.linear(&x, &y);
    let h2 = env.linear(&y, &z);
    let k = env.linear(&x, &y);
    let mut built = vec![("h2 h1", inst.compose(&h2, &h1)?), ("<h1, k>", inst.prod_pair(&h1, &k)?)];
    if let Some(s) = dv::sum(inst, &h1, &k)? {
        built.push(("h1 + k", s));
    }
    for (what, h) in built {
        if !dv::is_d_linear(inst, &h)? {
            return Ok(fail(format!("{what} is not D-linear"), vec![format!("{h}")]));
        }
    }
    Ok(Verdict::Pass)
}

fn law_linear_characterisation<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let (x, y) = (env.object(), env.object());
    let h = if env.rng.gen_bool(0.5) { env.linear(&x, &y) } else { env.arbitrary(&x, &y) };
    let partial = dv::partial_differential(inst, &h)?;
    if partial != inst.compose(&h, &inst.proj_d(1, &x))? {
        return Ok(Verdict::Skip);
    }
    if !dv::is_additive(inst, &h)? {
        return Ok(fail("partial h = h pi_1 but h is not additive", vec![format!("h = {h}")]));
    }
    Ok(Verdict::Pass)
}

// Differential structure.

fn law_dproj_lin<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let x = env.object();
    let dx = inst.d_object(&x);
    for i in 0..2 {
        let p = inst.proj_d(i, &x);
        check!(env, "partial pi_i = pi_i pi_1", dv::partial_differential(inst, &p)?, inst.compose(&p, &inst.proj_d(1, &dx))?);
    }
    Ok(Verdict::Pass)
}

fn law_dsum_lin<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let (x, y) = (env.object(), env.object());
    let dx = inst.d_object(&x);
    let s = inst.sigma(&x);
    check!(env, "partial sigma = sigma pi_1", dv::partial_differential(inst, &s)?, inst.compose(&s, &inst.proj_d(1, &dx))?);
    check!(env, "D 0 = 0", inst.d_morphism(&inst.zero(&x, &y))?, inst.zero(&dx, &inst.d_object(&y)));
    Ok(Verdict::Pass)
}

fn law_d_chain<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let (x, y, z) = (env.object(), env.object(), env.object());
    check!(env, "D id = id", inst.d_morphism(&inst.identity(&x))?, inst.identity(&inst.d_object(&x)));
    let f = env.arbitrary(&x, &y);
    let g = env.arbitrary(&y, &z);
    let gf = inst.compose(&g, &f)?;
    check!(env, "D (g f) = D g D f", inst.d_morphism(&gf)?, inst.compose(&inst.d_morphism(&g)?, &inst.d_morphism(&f)?)?);
    Ok(Verdict::Pass)
}

fn law_d_add<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let (x, y) = (env.object(), env.object());
    let f = env.arbitrary(&x, &y);
    let df = inst.d_morphism(&f)?;
    let ddf = inst.d_morphism(&df)?;
    check!(env, "D f iota_0 = iota_0 f", inst.compose(&df, &inst.inj_d(0, &x)?)?, inst.compose(&inst.inj_d(0, &y)?, &f)?);
    check!(env, "D f theta = theta D D f", inst.compose(&df, &inst.theta(&x)?)?, inst.compose(&inst.theta(&y)?, &ddf)?);
    Ok(Verdict::Pass)
}

fn law_d_lin<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let (x, y) = (env.object(), env.object());
    let f = env.arbitrary(&x, &y);
    let df = inst.d_morphism(&f)?;
    let ddf = inst.d_morphism(&df)?;
    check!(env, "D D f l = l D f", inst.compose(&ddf, &inst.lift(&x)?)?, inst.compose(&inst.lift(&y)?, &df)?);
    Ok(Verdict::Pass)
}

fn law_d_schwarz<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let (x, y) = (env.object(), env.object());
    let f = env.arbitrary(&x, &y);
    let ddf = dv::d_iter(inst, &f, 2)?;
    check!(env, "D D f c = c D D f", inst.compose(&ddf, &inst.swap(&x)?)?, inst.compose(&inst.swap(&y)?, &ddf)?);
    Ok(Verdict::Pass)
}

fn law_pair_derivative<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let (x, z) = (env.object(), env.object());
    let f0 = env.small(&z, &x);
    let f1 = env.small(&z, &x);
    let Some(w) = inst.pair_witness(&f0, &f1)? else { return Ok(Verdict::Skip) };
    let cdw = inst.compose(&inst.swap(&x)?, &inst.d_morphism(&w)?)?;
    let (d0, d1) = (inst.d_morphism(&f0)?, inst.d_morphism(&f1)?);
    match inst.pair_witness_under(&d0, &d1, &inst.d_morphism(&inst.compose(&inst.sigma(&x), &w)?)?)? {
        Some(v) => check!(env, "<D f0, D f1> = c D <f0, f1>", v, cdw),
        None => return Ok(fail("D f0, D f1 not summable", vec![format!("f0 = {f0}"), format!("f1 = {f1}")])),
    }
    Ok(Verdict::Pass)
}

// Monad and structural maps.

fn law_monad_unit<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let x = env.object();
    let dx = inst.d_object(&x);
    let theta = inst.theta(&x)?;
    let id = inst.identity(&dx);
    check!(env, "theta D iota_0 = id", inst.compose(&theta, &inst.d_morphism(&inst.inj_d(0, &x)?)?)?, id);
    check!(env, "theta iota_0 = id", inst.compose(&theta, &inst.inj_d(0, &dx)?)?, id);
    Ok(Verdict::Pass)
}

fn law_monad_assoc<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let x = env.object();
    let dx = inst.d_object(&x);
    let theta = inst.theta(&x)?;
    check!(
        env,
        "theta D theta = theta theta",
        inst.compose(&theta, &inst.d_morphism(&theta)?)?,
        inst.compose(&theta, &inst.theta(&dx)?)?
    );
    Ok(Verdict::Pass)
}

fn law_swap<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let x = env.object();
    let c = inst.swap(&x)?;
    let ddx = inst.d_object(&inst.d_object(&x));
    check!(env, "c c = id", inst.compose(&c, &c)?, inst.identity(&ddx));
    check!(env, "c l = l", inst.compose(&c, &inst.lift(&x)?)?, inst.lift(&x)?);
    Ok(Verdict::Pass)
}

fn law_structure_derived<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let x = env.object();
    check!(env, "iota_0", inst.inj_d(0, &x)?, dv::inj_via_witness(inst, 0, &x)?);
    check!(env, "iota_1", inst.inj_d(1, &x)?, dv::inj_via_witness(inst, 1, &x)?);
    check!(env, "theta", inst.theta(&x)?, dv::theta_via_witness(inst, &x)?);
    check!(env, "l", inst.lift(&x)?, dv::lift_via_witness(inst, &x)?);
    check!(env, "c", inst.swap(&x)?, dv::swap_via_witness(inst, &x)?);
    Ok(Verdict::Pass)
}

fn law_structure_linear<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let x = env.object();
    let maps = [
        ("iota_0", inst.inj_d(0, &x)?),
        ("iota_1", inst.inj_d(1, &x)?),
        ("theta", inst.theta(&x)?),
        ("l", inst.lift(&x)?),
        ("c", inst.swap(&x)?),
        ("sigma", inst.sigma(&x)),
    ];
    for (what, h) in maps {
        if !dv::is_d_linear(inst, &h)? {
            return Ok(fail(format!("{what} is not D-linear on {x}"), vec![]));
        }
    }
    Ok(Verdict::Pass)
}

// The same laws phrased with partial f = pi_1 D f.

fn law_partial_chain<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let (x, y, z) = (env.object(), env.object(), env.object());
    let f = env.arbitrary(&x, &y);
    let g = env.arbitrary(&y, &z);
    let fp0 = inst.compose(&f, &inst.proj_d(0, &x))?;
    let df = dv::partial_differential(inst, &f)?;
    let bound = inst.compose(&f, &inst.sigma(&x))?;
    let Some(w) = inst.pair_witness_under(&fp0, &df, &bound)? else {
        return Ok(fail("f pi_0, partial f not summable", vec![format!("f = {f}")]));
    };
    check!(env, "<f pi_0, partial f> = D f", w, inst.d_morphism(&f)?);
    let gf = inst.compose(&g, &f)?;
    check!(
        env,
        "partial (g f) = partial g <f pi_0, partial f>",
        dv::partial_differential(inst, &gf)?,
        inst.compose(&dv::partial_differential(inst, &g)?, &w)?
    );
    check!(env, "partial id = pi_1", dv::partial_differential(inst, &inst.identity(&x))?, inst.proj_d(1, &x));
    Ok(Verdict::Pass)
}

fn law_partial_add<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let (x, y) = (env.object(), env.object());
    let f = env.arbitrary(&x, &y);
    let df = dv::partial_differential(inst, &f)?;
    let dx = inst.d_object(&x);
    check!(env, "partial f iota_0 = 0", inst.compose(&df, &inst.inj_d(0, &x)?)?, inst.zero(&x, &y));
    let lhs = inst.compose(&df, &inst.theta(&x)?)?;
    let a = inst.compose(&df, &inst.d_morphism(&inst.proj_d(0, &x))?)?;
    let b = inst.compose(&df, &inst.proj_d(0, &dx))?;
    match dv::sum_under(inst, &a, &b, &lhs)? {
        Some(s) => check!(env, "partial f theta = partial f D pi_0 + partial f pi_0", lhs, s),
        None => return Ok(fail("partial f D pi_0, partial f pi_0 not summable", vec![format!("f = {f}")])),
    }
    Ok(Verdict::Pass)
}

fn law_partial_lin<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let (x, y) = (env.object(), env.object());
    let f = env.arbitrary(&x, &y);
    let df = dv::partial_differential(inst, &f)?;
    let ddf = dv::partial_differential(inst, &df)?;
    check!(env, "partial partial f l = partial f", inst.compose(&ddf, &inst.lift(&x)?)?, df);
    Ok(Verdict::Pass)
}

fn law_partial_schwarz<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let (x, y) = (env.object(), env.object());
    let f = env.arbitrary(&x, &y);
    let ddf = dv::partial_differential(inst, &dv::partial_differential(inst, &f)?)?;
    check!(env, "partial partial f c = partial partial f", inst.compose(&ddf, &inst.swap(&x)?)?, ddf);
    Ok(Verdict::Pass)
}

fn law_partial_sum<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let (x, y) = (env.object(), env.object());
    let f0 = env.small(&x, &y);
    let f1 = env.small(&x, &y);
    let Some(s) = dv::sum(inst, &f0, &f1)? else { return Ok(Verdict::Skip) };
    let ds = dv::partial_differential(inst, &s)?;
    let d0 = dv::partial_differential(inst, &f0)?;
    let d1 = dv::partial_differential(inst, &f1)?;
    match sum_or_fail(inst, &d0, &d1, Some(&ds))? {
        Some(t) => check!(env, "partial (f0 + f1) = partial f0 + partial f1", ds, t),
        None => return Ok(fail("partial f0, partial f1 not summable", vec![format!("f0 = {f0}"), format!("f1 = {f1}")])),
    }
    Ok(Verdict::Pass)
}

// Cartesian structure.

fn law_prod_proj_linear<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let (x0, x1) = (env.object(), env.object());
    for i in 0..2 {
        if !dv::is_d_linear(inst, &inst.prod_proj(i, &x0, &x1))? {
            return Ok(fail(format!("pr_{i} on {x0} & {x1} is not D-linear"), vec![]));
        }
    }
    Ok(Verdict::Pass)
}

fn law_c_with_iso<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let (x0, x1) = (env.object(), env.object());
    let c = dv::c_with(inst, &x0, &x1)?;
    let ci = dv::c_with_inv(inst, &x0, &x1)?;
    let p = inst.product(&x0, &x1);
    check!(env, "c_with c_with^-1 = id", inst.compose(&c, &ci)?, inst.identity(&inst.product(&inst.d_object(&x0), &inst.d_object(&x1))));
    check!(env, "c_with^-1 c_with = id", inst.compose(&ci, &c)?, inst.identity(&inst.d_object(&p)));
    Ok(Verdict::Pass)
}

fn law_d_pairing<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let (z, y0, y1) = (env.object(), env.object(), env.object());
    let f0 = env.arbitrary(&z, &y0);
    let f1 = env.arbitrary(&z, &y1);
    let pair = inst.prod_pair(&f0, &f1)?;
    let rhs = inst.compose(&dv::c_with_inv(inst, &y0, &y1)?, &inst.prod_pair(&inst.d_morphism(&f0)?, &inst.d_morphism(&f1)?)?)?;
    check!(env, "D <f0, f1> = c_with^-1 <D f0, D f1>", inst.d_morphism(&pair)?, rhs);
    Ok(Verdict::Pass)
}

fn law_strength<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let (x0, x1) = (env.object(), env.object());
    let (dx0, dx1) = (inst.d_object(&x0), inst.d_object(&x1));
    let slots = [x0.clone(), x1.clone()];
    let phi0_outer = dv::strength(inst, &[x0.clone(), dx1.clone()], 0)?;
    let phi1_outer = dv::strength(inst, &[dx0.clone(), x1.clone()], 1)?;
    let d_phi1 = inst.d_morphism(&dv::strength(inst, &slots, 1)?)?;
    let d_phi0 = inst.d_morphism(&dv::strength(inst, &slots, 0)?)?;
    let p = inst.product(&x0, &x1);
    let left = inst.compose(&d_phi1, &phi0_outer)?;
    let right = inst.compose(&d_phi0, &phi1_outer)?;
    check!(env, "c D phi_1 phi_0 = D phi_0 phi_1", inst.compose(&inst.swap(&p)?, &left)?, right);
    let ci = dv::c_with_inv(inst, &x0, &x1)?;
    check!(env, "theta D phi_1 phi_0 = c_with^-1", inst.compose(&inst.theta(&p)?, &left)?, ci);
    Ok(Verdict::Pass)
}

fn law_partial_base<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let slots = [env.object(), env.object()];
    let y = env.object();
    let f = env.arbitrary(&inst.product(&slots[0], &slots[1]), &y);
    let i = env.rng.gen_range(0..2);
    let di = inst.partial_derivative(&f, &slots, i)?;
    check!(env, "partial derivative agrees with D f phi_i", di, dv::partial_derivative_via_strength(inst, &f, &slots, i)?);
    let lhs = inst.compose(&inst.proj_d(0, &y), &di)?;
    let rhs = inst.compose(&f, &dv::single_app(inst, &slots, i, &inst.proj_d(0, &slots[i]))?)?;
    check!(env, "pi_0 D_i f = f (.. pi_0 ..)", lhs, rhs);
    Ok(Verdict::Pass)
}

fn law_leibniz<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let slots = [env.object(), env.object()];
    let y = env.object();
    let f = env.arbitrary(&inst.product(&slots[0], &slots[1]), &y);
    let lhs = inst.compose(&inst.d_morphism(&f)?, &dv::c_with_inv(inst, &slots[0], &slots[1])?)?;
    let theta = inst.theta(&y)?;
    let (d01, _) = dv::partial_word(inst, &f, &slots, &[1, 0])?;
    let (d10, _) = dv::partial_word(inst, &f, &slots, &[0, 1])?;
    check!(env, "D f c_with^-1 = theta D_0 D_1 f", lhs, inst.compose(&theta, &d01)?);
    check!(env, "D f c_with^-1 = theta D_1 D_0 f", lhs, inst.compose(&theta, &d10)?);
    Ok(Verdict::Pass)
}

fn law_schwarz_partial<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let slots = [env.object(), env.object()];
    let y = env.object();
    let f = env.arbitrary(&inst.product(&slots[0], &slots[1]), &y);
    let (d01, _) = dv::partial_word(inst, &f, &slots, &[1, 0])?;
    let (d10, _) = dv::partial_word(inst, &f, &slots, &[0, 1])?;
    check!(env, "D_0 D_1 f = c D_1 D_0 f", d01, inst.compose(&inst.swap(&y)?, &d10)?);
    Ok(Verdict::Pass)
}

// Multilinear maps.

fn random_slots<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Vec<I::Object> {
    let n = env.rng.gen_range(1..=3);
    (0..n).map(|_| env.object()).collect()
}

fn law_multilinear_partial<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let slots = random_slots(env);
    let y = env.object();
    let f = env.sampler.multilinear(&slots, &y);
    if !dv::is_multilinear_by_derivative(inst, &f, &slots)? {
        return Ok(fail("sampled map is not multilinear", vec![format!("f = {f}")]));
    }
    let i = env.rng.gen_range(0..slots.len());
    let di = inst.partial_derivative(&f, &slots, i)?;
    if !dv::is_multilinear_by_derivative(inst, &di, &dv::d_slot(inst, &slots, i))? {
        return Ok(fail(format!("D_{i} f is not multilinear"), vec![format!("f = {f}")]));
    }
    let z = env.object();
    let h = env.linear(&y, &z);
    let hf = inst.compose(&h, &f)?;
    if !dv::is_multilinear_by_derivative(inst, &hf, &slots)? {
        return Ok(fail("h f is not multilinear", vec![format!("f = {f}"), format!("h = {h}")]));
    }
    Ok(Verdict::Pass)
}

fn law_bilinear_expansion<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let slots = [env.object(), env.object()];
    let y = env.object();
    let f = env.sampler.multilinear(&slots, &y);
    let (x0, x1) = (&slots[0], &slots[1]);
    let lhs = dv::compose_all(inst, &[&inst.proj_d(1, &y), &inst.d_morphism(&f)?, &dv::c_with_inv(inst, x0, x1)?])?;
    let with = |i: u8, j: u8| -> Res<I::Morphism> { inst.compose(&f, &dv::nary_with(inst, &[inst.proj_d(i, x0), inst.proj_d(j, x1)])?) };
    let bound = inst.compose(&f, &dv::nary_with(inst, &[inst.sigma(x0), inst.sigma(x1)])?)?;
    match dv::sum_under(inst, &with(1, 0)?, &with(0, 1)?, &bound)? {
        Some(s) => check!(env, "pi_1 D f c_with^-1 = f (pi_1 & pi_0) + f (pi_0 & pi_1)", lhs, s),
        None => return Ok(fail("expansion terms not summable", vec![format!("f = {f}")])),
    }
    Ok(Verdict::Pass)
}

fn law_leibniz_nary<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let slots = random_slots(env);
    let y = env.object();
    let f = env.sampler.multilinear(&slots, &y);
    let mut order: Vec<usize> = (0..slots.len()).collect();
    order.shuffle(&mut env.rng);
    let (d, _) = dv::partial_word(inst, &f, &slots, &order)?;
    let n = slots.len() as u32 - 1;
    let rhs = inst.compose(&dv::theta_iter(inst, n, &y)?, &d)?;
    let lhs = inst.compose(&inst.d_morphism(&f)?, &c_with_inv_n(inst, &slots)?)?;
    check!(env, "D f (c^n)^-1 = theta^n D_a(n) .. D_a(0) f", lhs, rhs);
    Ok(Verdict::Pass)
}

/// `D X_0 & .. & D X_n -> D (X_0 & .. & X_n)`, built by nesting the binary one.
fn c_with_inv_n<I: Ccdc>(inst: &I, slots: &[I::Object]) -> Res<I::Morphism> {
    let (last, prefix) = slots.split_last().expect("at least one slot");
    if prefix.is_empty() {
        return Ok(inst.identity(&inst.d_object(last)));
    }
    let front = dv::product_n(inst, prefix);
    let inner = c_with_inv_n(inst, prefix)?;
    let step = dv::nary_with(inst, &[inner, inst.identity(&inst.d_object(last))])?;
    inst.compose(&dv::c_with_inv(inst, &front, last)?, &step)
}

fn law_dd_proj_commute<I: Ccdc, S: Sampler<I>>(env: &mut Env<'_, I, S>) -> Res<Verdict> {
    let inst = env.inst;
    let slots = random_slots(env);
    let y = env.object();
    let f = env.sampler.multilinear(&slots, &y);
    let i = env.rng.gen_range(0..slots.len());
    let depth = env.rng.gen_range(0..=2u32);
    let letters: Vec<usize> = (0..depth).map(|_| env.rng.gen_range(0..slots.len())).collect();
    let hits = letters.iter().filter(|&&l| l == i).count() as u32;
    let k = env.rng.gen_range(0..2u8);
    let mut word = vec![i];
    word.extend(&letters);
    let (lhs_map, _) = dv::partial_word(inst, &f, &slots, &word)?;
    let lhs = inst.compose(&dv::d_iter(inst, &inst.proj_d(k, &y), depth)?, &lhs_map)?;
    let (rhs_map, rhs_slots) = dv::partial_word(inst, &f, &slots, &letters)?;
    let inner = dv::d_iter(inst, &inst.proj_d(k, &slots[i]), hits)?;
    let mut lhs_slots = rhs_slots.clone();
    lhs_slots[i] = inst.domain(&inner);
    let rhs = inst.compose(&rhs_map, &dv::single_app(inst, &lhs_slots, i, &inner)?)?;
    check!(env, "D^d pi_k D_w D_i f = D_w f (.. D^h pi_k ..)", lhs, rhs);
    Ok(Verdict::Pass)
}

fn laws_of<I: Ccdc, S: Sampler<I>>(family: LawFamily) -> Vec<Law<I, S>> {
    match family {
        LawFamily::Summability => vec![
            ("D-com", law_d_com::<I, S> as Case<I, S>),
            ("D-zero", law_d_zero),
            ("D-witness", law_d_witness),
            ("sum-left-compatible", law_sum_left_compatible),
            ("sum-associative", law_sum_associative),
            ("structure-additive", law_structure_additive),
            ("linear-closure", law_linear_closure),
            ("linear-characterisation", law_linear_characterisation),
        ],
        LawFamily::Differential => vec![
            ("Dproj-lin", law_dproj_lin::<I, S> as Case<I, S>),
            ("Dsum-lin", law_dsum_lin),
            ("D-chain", law_d_chain),
            ("D-add", law_d_add),
            ("D-lin", law_d_lin),
            ("D-Schwarz", law_d_schwarz),
            ("pair-derivative", law_pair_derivative),
        ],
        LawFamily::Monad => vec![
            ("monad-unit", law_monad_unit::<I, S> as Case<I, S>),
            ("monad-assoc", law_monad_assoc),
            ("swap-involution", law_swap),
            ("structure-derived", law_structure_derived),
            ("structure-linear", law_structure_linear),
        ],
        LawFamily::Reformulated => vec![
            ("partial-chain", law_partial_chain::<I, S> as Case<I, S>),
            ("partial-add", law_partial_add),
            ("partial-lin", law_partial_lin),
            ("partial-Schwarz", law_partial_schwarz),
            ("partial-sum", law_partial_sum),
        ],
        LawFamily::Cartesian => vec![
            ("prod-proj-linear", law_prod_proj_linear::<I, S> as Case<I, S>),
            ("c-with-iso", law_c_with_iso),
            ("D-pairing", law_d_pairing),
            ("strength", law_strength),
            ("partial-derivative-base", law_partial_base),
            ("Leibniz", law_leibniz),
            ("Schwarz-partial", law_schwarz_partial),
        ],
        LawFamily::Multilinear => vec![
            ("multilinear-closure", law_multilinear_partial::<I, S> as Case<I, S>),
            ("bilinear-expansion", law_bilinear_expansion),
            ("Leibniz-nary", law_leibniz_nary),
            ("DDproj-commute", law_dd_proj_commute),
        ],
    }
}
