//! Replay of the non-existence argument for hypercomplex structures on
//! `sl(3,ℝ)` over the polynomial ring, and the equivalence of II and III.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::catalog::{sasaki_basis, sigma_matrix, table_algebra, CatalogError, SasakiFamily, TableAlgebra};
use crate::liealg::{vector, LieAlgebra, Matrix, MatrixAlgebra, Subspace, Vector};
use crate::scalars::{Assignment, GaussRational, Poly, Rational, Ring, ScalarError, Var};
use crate::structures::nijenhuis;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ProofError {
    #[error("step {label} failed: {reason}")]
    StepFailed { label: String, reason: String },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

fn lam(k: usize) -> Var {
    Var::new(&format!("l{k}"))
}

fn l(k: usize) -> Poly {
    Poly::var(lam(k))
}

fn lb(k: usize) -> Poly {
    Poly::var(lam(k).conj())
}

fn q(n: i64, d: i64) -> Poly {
    Poly::rational(Rational::new(n, d))
}

fn abs2(k: usize) -> Poly {
    l(k).mul(&lb(k))
}

fn sum(ps: &[Poly]) -> Poly {
    ps.iter().fold(Poly::zero(), |a, p| a.add(p))
}

fn prod(ps: &[Poly]) -> Poly {
    ps.iter().fold(Poly::one(), |a, p| a.mul(p))
}

/// `J` on `{U, X, Y, Z, U^σ, X^σ, Y^σ, Z^σ}`: `λ_{4c+r+1}` in the lower-left
/// block at `(r, c)`, its conjugate in the upper-right block.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicJ {
    pub matrix: Matrix<Poly>,
}

impl SymbolicJ {
    pub fn new() -> SymbolicJ {
        SymbolicJ { matrix: pattern(l) }
    }
}

impl Default for SymbolicJ {
    fn default() -> SymbolicJ {
        SymbolicJ::new()
    }
}

/// The pattern over any conjugation ring.
pub fn pattern<S: Ring + crate::scalars::Conjugate>(value: impl Fn(usize) -> S) -> Matrix<S> {
    let mut m = Matrix::zeros(8, 8);
    for r in 0..4 {
        for c in 0..4 {
            let v = value(4 * c + r + 1);
            m.set(r, 4 + c, v.conj());
            m.set(4 + r, c, v);
        }
    }
    m
}

/// A quantity that must vanish: `N_ijk` or `C_ij`, 1-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Quantity {
    N(usize, usize, usize),
    C(usize, usize),
}

impl std::fmt::Display for Quantity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Quantity::N(i, j, k) => write!(f, "N{i}{j}{k}"),
            Quantity::C(i, j) => write!(f, "C{i}{j}"),
        }
    }
}

/// `Σ c · q` over vanishing quantities.
#[derive(Clone, Debug, PartialEq)]
pub struct Expr(pub Vec<(Poly, Quantity)>);

impl Expr {
    pub fn single(q: Quantity) -> Expr {
        Expr(vec![(Poly::one(), q)])
    }

    pub fn n(i: usize, j: usize, k: usize) -> Expr {
        Expr::single(Quantity::N(i, j, k))
    }

    pub fn c(i: usize, j: usize) -> Expr {
        Expr::single(Quantity::C(i, j))
    }

    pub fn minus(mut self, other: Expr) -> Expr {
        self.0.extend(other.0.into_iter().map(|(c, q)| (c.neg(), q)));
        self
    }

    pub fn plus(mut self, other: Expr) -> Expr {
        self.0.extend(other.0);
        self
    }

    pub fn scaled(self, c: &Poly) -> Expr {
        Expr(self.0.into_iter().map(|(k, q)| (k.mul(c), q)).collect())
    }
}

impl std::fmt::Display for Expr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(c, q)| if c.is_one() { q.to_string() } else { format!("({c})·{q}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Factors known not to vanish.
#[derive(Clone, Debug, PartialEq)]
pub enum Factor {
    Constant(Poly),
    /// From `|λ| < 1`.
    UnitDisc(UnitFactor),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum UnitFactor {
    BarPlusOne,
    BarMinusTwo,
    PlusOne,
    MinusTwo,
}

impl UnitFactor {
    fn poly(self) -> Poly {
        let (lam, lamb) = (Poly::sym("lambda"), Poly::sym_conj("lambda"));
        match self {
            UnitFactor::BarPlusOne => lamb.add(&Poly::one()),
            UnitFactor::BarMinusTwo => lamb.sub(&q(2, 1)),
            UnitFactor::PlusOne => lam.add(&Poly::one()),
            UnitFactor::MinusTwo => lam.sub(&q(2, 1)),
        }
    }
}

impl Factor {
    fn poly(&self) -> Result<Poly, String> {
        match self {
            Factor::Constant(c) => match c.as_constant() {
                Some(z) if !z.is_zero() => Ok(c.clone()),
                _ => Err(format!("{c} is not a nonzero constant")),
            },
            Factor::UnitDisc(u) => Ok(u.poly()),
        }
    }
}

/// What makes the cofactors of a deduction nonzero.
#[derive(Clone, Debug, PartialEq)]
pub enum Cofactor {
    /// One premise per variable of a registered nonzero set.
    Set(String),
    /// A single variable (or its conjugate) already shown nonzero.
    Known(Var),
}

#[derive(Clone, Debug, PartialEq)]
pub enum ProofStep {
    /// `expr` equals `claimed` after the current substitutions.
    Identity { label: String, expr: Expr, claimed: Poly },
    /// The premise with every listed variable set to zero is a nonzero
    /// constant, so one of them is nonzero.
    NonzeroSet { label: String, premise: String, vars: Vec<Var> },
    /// The premise with `var = 0` cannot vanish.
    Nonzero { label: String, premise: String, var: Var },
    /// Every premise equals `cofactor · Π factors · (var − value)` or the
    /// conjugate form; binds `var := value`.
    Deduce { label: String, premises: Vec<String>, cofactor: Cofactor, factors: Vec<Factor>, var: Var, value: Poly },
    /// The premise equals `scale · Π (var − value_b)`; each branch binds
    /// `var := value_b` and runs its own steps.
    Branch { label: String, premise: String, var: Var, scale: Poly, branches: Vec<(Poly, Vec<ProofStep>)> },
    /// `expr` must vanish yet equals `claimed`, which cannot.
    Contradiction { label: String, expr: Expr, claimed: Poly },
}

impl ProofStep {
    pub fn label(&self) -> &str {
        match self {
            ProofStep::Identity { label, .. }
            | ProofStep::NonzeroSet { label, .. }
            | ProofStep::Nonzero { label, .. }
            | ProofStep::Deduce { label, .. }
            | ProofStep::Branch { label, .. }
            | ProofStep::Contradiction { label, .. } => label,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            ProofStep::Identity { .. } => "identity",
            ProofStep::NonzeroSet { .. } => "nonzero-set",
            ProofStep::Nonzero { .. } => "nonzero",
            ProofStep::Deduce { .. } => "deduce",
            ProofStep::Branch { .. } => "branch",
            ProofStep::Contradiction { .. } => "contradiction",
        }
    }
}

/// The table algebra with the symbolic `J`, and all `N(e_i, e_j)` and `C`.
#[derive(Clone, Debug)]
pub struct ProofContext {
    pub table: TableAlgebra,
    pub j: SymbolicJ,
    n: Vec<Vector<Poly>>,
    c: Matrix<Poly>,
}

impl ProofContext {
    pub fn new(family: &SasakiFamily<()>) -> Result<ProofContext, ProofError> {
        let table = table_algebra(family)?;
        let j = SymbolicJ::new();
        let alg: &LieAlgebra<Poly> = &table.algebra;
        let mut n = Vec::with_capacity(64);
        for a in 0..8 {
            for b in 0..8 {
                let v = nijenhuis(alg, &j.matrix, &vector::unit(8, a), &vector::unit(8, b));
                n.push(v.iter().map(|p| table.reducer.reduce(p)).collect());
            }
        }
        let c = j.matrix.mul(&j.matrix).add(&Matrix::identity(8));
        Ok(ProofContext { table, j, n, c })
    }

    pub fn family(&self) -> &'static str {
        self.table.family
    }

    /// `N_ijk`, the `e_k`-coefficient of `N(e_j, e_i)`, 1-indexed.
    pub fn n(&self, i: usize, j: usize, k: usize) -> Poly {
        self.n[(j - 1) * 8 + (i - 1)][k - 1].clone()
    }

    pub fn c(&self, i: usize, j: usize) -> Poly {
        self.c.get(i - 1, j - 1).clone()
    }

    pub fn quantity(&self, q: Quantity) -> Poly {
        match q {
            Quantity::N(i, j, k) => self.n(i, j, k),
            Quantity::C(i, j) => self.c(i, j),
        }
    }

    pub fn eval(&self, e: &Expr) -> Poly {
        sum(&e.0.iter().map(|(c, q)| c.mul(&self.quantity(*q))).collect::<Vec<_>>())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StepReport {
    pub label: String,
    pub kind: &'static str,
    pub passed: bool,
    /// Nonzero residual or reason, when failed.
    pub diagnostic: Option<String>,
    pub axioms: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProofReport {
    pub family: String,
    pub table: String,
    pub branch: Vec<String>,
    pub steps: Vec<StepReport>,
    pub identities_verified: usize,
    pub contradiction: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, Default)]
struct ProofState {
    assignment: Assignment,
    identities: BTreeMap<String, Poly>,
    nonzero: BTreeSet<String>,
    sets: BTreeMap<String, Vec<Var>>,
}

impl ProofState {
    fn apply(&self, ctx: &ProofContext, p: &Poly) -> Poly {
        ctx.table.reducer.reduce(&p.substitute(&self.assignment))
    }

    fn premise(&self, ctx: &ProofContext, label: &str) -> Result<Poly, String> {
        self.identities
            .get(label)
            .map(|p| self.apply(ctx, p))
            .ok_or_else(|| format!("premise {label} has not been verified"))
    }
}

fn is_real_positive(z: &GaussRational) -> bool {
    z.im.is_zero() && z.re.is_positive()
}

/// Positive constant plus positive multiples of `|v|²`, with either the
/// constant or some `v` known nonzero.
fn positive_hermitian(p: &Poly, nonzero: &BTreeSet<String>) -> bool {
    let mut strict = false;
    for (m, c) in p.terms() {
        if !is_real_positive(c) {
            return false;
        }
        match m.factors() {
            [] => strict = true,
            [(a, 1), (b, 1)] if a.name() == b.name() && a.is_conjugated() != b.is_conjugated() => {
                strict |= nonzero.contains(a.name());
            }
            _ => return false,
        }
    }
    strict
}

fn cannot_vanish(p: &Poly, nonzero: &BTreeSet<String>) -> bool {
    p.as_constant().is_some_and(|z| !z.is_zero()) || positive_hermitian(p, nonzero)
}

fn zero_out(vars: &[Var]) -> Result<Assignment, ScalarError> {
    let mut a = Assignment::new();
    for v in vars {
        a.bind(v.clone(), Poly::zero())?;
    }
    Ok(a)
}

struct Replay<'a> {
    ctx: &'a ProofContext,
    steps: Vec<StepReport>,
    identities: usize,
    contradiction: bool,
}

impl Replay<'_> {
    fn record(&mut self, step: &ProofStep, result: Result<Vec<String>, String>) -> bool {
        let passed = result.is_ok();
        let (diagnostic, axioms) = match result {
            Ok(ax) => (None, ax),
            Err(e) => (Some(e), Vec::new()),
        };
        self.steps.push(StepReport { label: step.label().to_string(), kind: step.kind(), passed, diagnostic, axioms });
        passed
    }

    /// Runs `steps`; returns the reports of every branch reached.
    fn run(&mut self, state: &mut ProofState, steps: &[ProofStep], branch: &[String]) -> Vec<ProofReport> {
        for (pos, step) in steps.iter().enumerate() {
            if let ProofStep::Branch { premise, var, scale, branches, .. } = step {
                let check = self.check_branch(state, premise, var, scale, branches);
                if !self.record(step, check) {
                    return vec![self.finish(branch, false)];
                }
                let mut out = Vec::new();
                for (value, rest) in branches {
                    let mut sub_state = state.clone();
                    let mut sub = Replay {
                        ctx: self.ctx,
                        steps: self.steps.clone(),
                        identities: self.identities,
                        contradiction: false,
                    };
                    let mut path = branch.to_vec();
                    path.push(format!("{var} = {value}"));
                    if let Err(e) = sub_state.assignment.bind(var.clone(), value.clone()) {
                        sub.steps.push(StepReport {
                            label: format!("{} := {}", var, value),
                            kind: "bind",
                            passed: false,
                            diagnostic: Some(e.to_string()),
                            axioms: Vec::new(),
                        });
                        out.push(sub.finish(&path, false));
                        continue;
                    }
                    let mut tail = rest.clone();
                    tail.extend_from_slice(&steps[pos + 1..]);
                    out.extend(sub.run(&mut sub_state, &tail, &path));
                }
                return out;
            }
            let result = self.check(state, step);
            if !self.record(step, result) {
                return vec![self.finish(branch, false)];
            }
        }
        vec![self.finish(branch, self.contradiction)]
    }

    fn finish(&self, branch: &[String], passed: bool) -> ProofReport {
        ProofReport {
            family: String::new(),
            table: self.ctx.family().to_string(),
            branch: branch.to_vec(),
            steps: self.steps.clone(),
            identities_verified: self.identities,
            contradiction: self.contradiction,
            passed: passed && self.steps.iter().all(|s| s.passed),
        }
    }

    fn check_branch(
        &self,
        state: &ProofState,
        premise: &str,
        var: &Var,
        scale: &Poly,
        branches: &[(Poly, Vec<ProofStep>)],
    ) -> Result<Vec<String>, String> {
        let p = state.premise(self.ctx, premise)?;
        let factors: Vec<Poly> = branches.iter().map(|(v, _)| Poly::var(var.clone()).sub(&state.apply(self.ctx, v))).collect();
        let residual = p.sub(&state.apply(self.ctx, &scale.mul(&prod(&factors))));
        if scale.as_constant().is_none_or(|z| z.is_zero()) {
            return Err(format!("scale {scale} is not a nonzero constant"));
        }
        if !residual.is_zero() {
            return Err(format!("residual {residual}"));
        }
        Ok(Vec::new())
    }

    fn check(&mut self, state: &mut ProofState, step: &ProofStep) -> Result<Vec<String>, String> {
        let ctx = self.ctx;
        match step {
            ProofStep::Identity { label, expr, claimed } => {
                let value = state.apply(ctx, &ctx.eval(expr));
                let residual = value.sub(&state.apply(ctx, claimed));
                if !residual.is_zero() {
                    return Err(format!("{expr}: residual {residual}"));
                }
                state.identities.insert(label.clone(), claimed.clone());
                self.identities += 1;
                Ok(Vec::new())
            }
            ProofStep::NonzeroSet { label, premise, vars } => {
                let p = state.premise(ctx, premise)?;
                let z = p.substitute(&zero_out(vars).map_err(|e| e.to_string())?);
                if !cannot_vanish(&ctx.table.reducer.reduce(&z), &state.nonzero) {
                    return Err(format!("{premise} with the set zeroed is {z}"));
                }
                state.sets.insert(label.clone(), vars.clone());
                Ok(Vec::new())
            }
            ProofStep::Nonzero { premise, var, .. } => {
                if state.assignment.get(var).is_some() {
                    return Err(format!("{var} is already assigned"));
                }
                let p = state.premise(ctx, premise)?;
                let z = ctx.table.reducer.reduce(&p.substitute(&zero_out(std::slice::from_ref(var)).map_err(|e| e.to_string())?));
                if !cannot_vanish(&z, &state.nonzero) {
                    return Err(format!("{premise} with {var} = 0 is {z}"));
                }
                state.nonzero.insert(var.name().to_string());
                Ok(Vec::new())
            }
            ProofStep::Deduce { premises, cofactor, factors, var, value, .. } => {
                let cofactors: Vec<Poly> = match cofactor {
                    Cofactor::Set(name) => {
                        let vars = state.sets.get(name).ok_or_else(|| format!("unknown nonzero set {name}"))?;
                        if vars.len() != premises.len() {
                            return Err(format!("{} premises for a set of {}", premises.len(), vars.len()));
                        }
                        vars.iter().map(|v| Poly::var(v.clone())).collect()
                    }
                    Cofactor::Known(v) => {
                        if !state.nonzero.contains(v.name()) || premises.len() != 1 {
                            return Err(format!("{v} is not known to be nonzero"));
                        }
                        vec![Poly::var(v.clone())]
                    }
                };
                let mut axioms = Vec::new();
                let mut common = Vec::new();
                for f in factors {
                    common.push(f.poly()?);
                    if let Factor::UnitDisc(u) = f {
                        axioms.push(format!("|lambda| < 1 => {} != 0", u.poly()));
                    }
                }
                let common = prod(&common);
                let value = state.apply(ctx, value);
                let forms = [
                    Poly::var(var.clone()).sub(&value),
                    Poly::var(var.conj()).sub(&crate::scalars::Conjugate::conj(&value)),
                ];
                for (prem, cof) in premises.iter().zip(&cofactors) {
                    let p = state.premise(ctx, prem)?;
                    let cof = state.apply(ctx, cof);
                    let ok = forms.iter().any(|t| p.sub(&ctx.table.reducer.reduce(&cof.mul(&common).mul(t))).is_zero());
                    if !ok {
                        return Err(format!("{prem} = {p} is not {cof} · ({common}) · ({var} − {value})"));
                    }
                }
                state.assignment.bind(var.clone(), value).map_err(|e| e.to_string())?;
                Ok(axioms)
            }
            ProofStep::Contradiction { expr, claimed, .. } => {
                let value = state.apply(ctx, &ctx.eval(expr));
                let claimed = state.apply(ctx, claimed);
                let residual = value.sub(&claimed);
                if !residual.is_zero() {
                    return Err(format!("{expr}: residual {residual}"));
                }
                if !cannot_vanish(&claimed, &state.nonzero) {
                    return Err(format!("{claimed} can vanish"));
                }
                self.contradiction = true;
                Ok(Vec::new())
            }
            ProofStep::Branch { .. } => unreachable!("branches are handled by run"),
        }
    }
}

/// Replays `steps` in `ctx`; one report per branch.
pub fn replay(ctx: &ProofContext, steps: &[ProofStep]) -> Vec<ProofReport> {
    let mut r = Replay { ctx, steps: Vec::new(), identities: 0, contradiction: false };
    r.run(&mut ProofState::default(), steps, &[])
}

fn identity(label: &str, expr: Expr, claimed: Poly) -> ProofStep {
    ProofStep::Identity { label: label.to_string(), expr, claimed }
}

fn constant(p: Poly) -> Factor {
    Factor::Constant(p)
}

/// `λ₁, λ₅, λ₉, λ₁₃`
const FIRST_ROW: [usize; 4] = [1, 5, 9, 13];

fn c11_steps() -> Vec<ProofStep> {
    vec![
        identity(
            "C11",
            Expr::c(1, 1),
            sum(&[abs2(1), lb(5).mul(&l(2)), lb(9).mul(&l(3)), lb(13).mul(&l(4)), Poly::one()]),
        ),
        ProofStep::NonzeroSet { label: "c11".into(), premise: "C11".into(), vars: FIRST_ROW.iter().map(|&k| lam(k)).collect() },
    ]
}

/// Four identities `N_{s,j,k} = c · λ_r · rest` for `s = 1..4`, then the
/// deduction from the nonzero set.
fn row_deduction(
    name: impl Fn(usize) -> String,
    expr: impl Fn(usize) -> Expr,
    tail: &Poly,
    factors: Vec<Factor>,
    var: usize,
    value: Poly,
) -> Vec<ProofStep> {
    let mut out: Vec<ProofStep> =
        (1..=4).map(|s| identity(&name(s), expr(s), l(FIRST_ROW[s - 1]).mul(tail))).collect();
    out.push(ProofStep::Deduce {
        label: format!("l{var}"),
        premises: (1..=4).map(&name).collect(),
        cofactor: Cofactor::Set("c11".into()),
        factors,
        var: lam(var),
        value,
    });
    out
}

/// Case `m = I_λ`.
pub fn script_i() -> Vec<ProofStep> {
    let lamb = Poly::sym_conj("lambda");
    let bar_plus = lamb.add(&Poly::one());
    let bar_minus = lamb.sub(&q(2, 1));
    let mut s = c11_steps();
    s.push(identity(
        "C66",
        Expr::c(6, 6),
        sum(&[lb(5).mul(&l(2)), abs2(6), lb(7).mul(&l(10)), lb(8).mul(&l(14)), Poly::one()]),
    ));
    s.extend(row_deduction(
        |r| format!("N{r}84"),
        |r| Expr::n(r, 8, 4),
        &q(-2, 1).mul(&lb(16)).mul(&bar_plus),
        vec![constant(q(-2, 1)), Factor::UnitDisc(UnitFactor::BarPlusOne)],
        16,
        Poly::zero(),
    ));
    s.extend(row_deduction(
        |r| format!("N{r}83"),
        |r| Expr::n(r, 8, 3),
        &q(-3, 1).mul(&lb(15)),
        vec![constant(q(-3, 1))],
        15,
        Poly::zero(),
    ));
    s.extend(row_deduction(
        |r| format!("N{r}64"),
        |r| Expr::n(r, 6, 4),
        &q(-3, 1).mul(&lb(8)),
        vec![constant(q(-3, 1))],
        8,
        Poly::zero(),
    ));
    s.extend(row_deduction(
        |r| format!("N{r}63"),
        |r| Expr::n(r, 6, 3),
        &q(2, 1).mul(&lb(7)).mul(&bar_minus),
        vec![constant(q(2, 1)), Factor::UnitDisc(UnitFactor::BarMinusTwo)],
        7,
        Poly::zero(),
    ));
    s.push(identity("N461", Expr::n(4, 6, 1), lb(5).mul(&l(13)).mul(&bar_minus)));
    s.push(identity("N462", Expr::n(4, 6, 2), l(13).mul(&lb(6)).mul(&bar_plus).neg().sub(&Poly::one())));
    s.push(ProofStep::Nonzero { label: "l13 != 0".into(), premise: "N462".into(), var: lam(13) });
    s.push(ProofStep::Nonzero { label: "l6 != 0".into(), premise: "N462".into(), var: lam(6) });
    s.push(ProofStep::Deduce {
        label: "l5".into(),
        premises: vec!["N461".into()],
        cofactor: Cofactor::Known(lam(13)),
        factors: vec![Factor::UnitDisc(UnitFactor::BarMinusTwo)],
        var: lam(5),
        value: Poly::zero(),
    });
    s.push(ProofStep::Contradiction { label: "C66 > 0".into(), expr: Expr::c(6, 6), claimed: abs2(6).add(&Poly::one()) });
    s
}

fn script_ii_branch(eps: i64) -> Vec<ProofStep> {
    let e = q(eps, 1);
    vec![
        identity("N342", Expr::n(3, 4, 2), q(-2, 3).mul(&lb(2)).mul(&l(12)).sub(&q(2, 1).mul(&abs2(10)))),
        identity(
            "N342'",
            Expr::n(3, 4, 2),
            q(-2, 1).mul(&e).mul(&lb(10)).mul(&l(12)).sub(&q(2, 1).mul(&abs2(10))),
        ),
        ProofStep::Deduce {
            label: "l12".into(),
            premises: vec!["N342'".into()],
            cofactor: Cofactor::Known(lam(10).conj()),
            factors: vec![constant(q(-2, 1).mul(&e))],
            var: lam(12),
            value: e.mul(&l(10)).neg(),
        },
        identity("N344", Expr::n(3, 4, 4), q(-2, 3).mul(&l(12)).mul(&lb(4)).sub(&q(2, 1).mul(&lb(12)).mul(&l(10)))),
        identity(
            "N344'",
            Expr::n(3, 4, 4),
            q(2, 3).mul(&e).mul(&lb(4)).mul(&l(10)).add(&q(2, 1).mul(&e).mul(&abs2(10))),
        ),
        ProofStep::Deduce {
            label: "l4".into(),
            premises: vec!["N344'".into()],
            cofactor: Cofactor::Known(lam(10)),
            factors: vec![constant(q(2, 3).mul(&e))],
            var: lam(4),
            value: q(-3, 1).mul(&l(10)),
        },
        identity(
            "N134",
            Expr::n(1, 3, 4),
            sum(&[
                q(1, 3).mul(&lb(4)).mul(&l(2)),
                q(3, 1).mul(&lb(8)).mul(&l(10)),
                lb(12).mul(&l(4)),
                q(3, 1).mul(&lb(10)).mul(&l(12)),
            ]),
        ),
        identity("N134'", Expr::n(1, 3, 4), q(3, 1).mul(&e.mul(&abs2(10)).neg().add(&lb(8).mul(&l(10))))),
        identity(
            "N144",
            Expr::n(1, 4, 4),
            sum(&[
                q(-1, 3).mul(&abs2(4)),
                q(3, 1).mul(&lb(8)).mul(&l(12)),
                lb(12).mul(&l(2)).neg(),
                q(3, 1).mul(&abs2(10)),
                q(-3, 1),
            ]),
        ),
        identity("N144'", Expr::n(1, 4, 4), q(3, 1).mul(&abs2(10).sub(&e.mul(&lb(8)).mul(&l(10))).sub(&Poly::one()))),
        ProofStep::Contradiction {
            label: "eps N134 + N144 = -3".into(),
            expr: Expr::n(1, 3, 4).scaled(&e).plus(Expr::n(1, 4, 4)),
            claimed: q(-3, 1),
        },
    ]
}

/// Case `m = II`, branching on `λ₂ = 3ελ₁₀`.
pub fn script_ii() -> Vec<ProofStep> {
    let mut s = c11_steps();
    s.extend(row_deduction(
        |r| format!("N{r}72-N{r}84"),
        |r| Expr::n(r, 7, 2).minus(Expr::n(r, 8, 4)),
        &q(6, 1).mul(&lb(16).sub(&lb(10))),
        vec![constant(q(6, 1))],
        16,
        l(10),
    ));
    s.extend(row_deduction(
        |r| format!("N{r}74-N{r}82"),
        |r| Expr::n(r, 7, 4).minus(Expr::n(r, 8, 2)),
        &q(6, 1).mul(&lb(14).sub(&lb(12))),
        vec![constant(q(6, 1))],
        14,
        l(12),
    ));
    s.push(identity(
        "N485",
        Expr::n(4, 8, 5),
        sum(&[
            q(1, 3).mul(&q(3, 1).mul(&l(9)).add(&q(2, 1).mul(&l(15)))).mul(&lb(12)),
            q(-1, 3).mul(&lb(15)).mul(&l(12)),
            q(1, 3).mul(&abs2(10)),
            q(3, 1).mul(&abs2(13)),
            q(1, 3),
        ]),
    ));
    s.push(ProofStep::Nonzero { label: "l12 != 0".into(), premise: "N485".into(), var: lam(12) });
    s.push(identity("N488", Expr::n(4, 8, 8), q(2, 1).mul(&abs2(12)).add(&q(6, 1).mul(&lb(13)).mul(&l(10)))));
    s.push(ProofStep::Nonzero { label: "l10 != 0".into(), premise: "N488".into(), var: lam(10) });
    s.push(identity("N136", Expr::n(1, 3, 6), q(2, 3).mul(&l(2).mul(&l(2))).sub(&q(6, 1).mul(&l(10).mul(&l(10))))));
    s.push(ProofStep::Branch {
        label: "l2 = 3 eps l10".into(),
        premise: "N136".into(),
        var: lam(2),
        scale: q(2, 3),
        branches: [1, -1].map(|eps| (q(3 * eps, 1).mul(&l(10)), script_ii_branch(eps))).into(),
    });
    s
}

/// The script for `family` run on the table for `table`.
pub fn replay_case(family: &SasakiFamily<()>, table: &SasakiFamily<()>) -> Result<Vec<ProofReport>, ProofError> {
    let script = match family {
        SasakiFamily::I(()) => script_i(),
        SasakiFamily::II => script_ii(),
        SasakiFamily::III => return Err(CatalogError::NoTable("III").into()),
    };
    let ctx = ProofContext::new(table)?;
    let mut reports = replay(&ctx, &script);
    for r in &mut reports {
        r.family = family.tag().to_string();
    }
    Ok(reports)
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub cases: Vec<ProofReport>,
    pub passed: bool,
}

/// Both cases; every branch must end in its contradiction.
pub fn replay_theorem() -> Result<TheoremReport, ProofError> {
    let mut cases = replay_case(&SasakiFamily::I(()), &SasakiFamily::I(()))?;
    cases.extend(replay_case(&SasakiFamily::II, &SasakiFamily::II)?);
    let passed = cases.iter().all(|c| c.passed);
    Ok(TheoremReport { cases, passed })
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    pub closed: bool,
    pub complement: bool,
    pub compared: usize,
    /// Pairs where III differs from the stored II table.
    pub mismatches: Vec<(usize, usize)>,
    /// Pairs where III differs from the `√2`-rescaled II table.
    pub rescaled_mismatches: Vec<(usize, usize)>,
    /// `"stored"` or `"rescaled"`, whichever agrees.
    pub matched: Option<&'static str>,
    pub passed: bool,
}

fn table_mismatches(a: &LieAlgebra<GaussRational>, t: &LieAlgebra<Poly>) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..8 {
        for j in i + 1..8 {
            let same = (0..8).all(|k| {
                let p = t.structure_constant(i, j, k);
                p.vars().is_empty() && p.as_constant().unwrap_or_else(GaussRational::zero) == a.structure_constant(i, j, k)
            });
            if !same {
                out.push((i, j));
            }
        }
    }
    out
}

/// The III root-vector basis spans a subalgebra with `g^ℂ = m ⊕ σ(m)` whose
/// constants are those of the II table.
pub fn verify_equivalence_ii_iii() -> Result<EquivalenceReport, ProofError> {
    let m = sasaki_basis::<GaussRational>(&SasakiFamily::III);
    let m_span = Subspace::from_vectors(9, m.iter().map(|x| x.vectorize()));
    let closed = m.iter().all(|a| m.iter().all(|b| m_span.contains(&a.commutator(b).vectorize())));
    let mut basis = m.clone();
    basis.extend(m.iter().map(sigma_matrix));
    let complement = Subspace::from_vectors(9, basis.iter().map(|b| b.vectorize())).dim() == 8;
    let alg = MatrixAlgebra::new(basis).map_err(CatalogError::from)?;
    let table = table_algebra(&SasakiFamily::II)?;
    let mismatches = table_mismatches(&alg.algebra, &table.algebra);
    let rescaled_mismatches = table_mismatches(&alg.algebra, &table.rescaled()?.algebra);
    let matched = if mismatches.is_empty() {
        Some("stored")
    } else if rescaled_mismatches.is_empty() {
        Some("rescaled")
    } else {
        None
    };
    let passed = closed && complement && matched.is_some();
    Ok(EquivalenceReport { closed, complement, compared: 28, mismatches, rescaled_mismatches, matched, passed })
}

/// Real coordinates `(Re, Im)` of each entry of an `8 × 8` complex matrix.
fn real_vector(m: &Matrix<GaussRational>) -> Vector<Rational> {
    m.entries().iter().flat_map(|z| [z.re.clone(), z.im.clone()]).collect()
}

/// The real solution space of `Jσ = σJ`, `J(m) ⊆ σ(m)`, `J(σ(m)) ⊆ m` for
/// a `ℂ`-linear `J`, and the span of the block pattern.
pub fn pattern_spaces() -> (Subspace<Rational>, Subspace<Rational>) {
    let sigma = Matrix::<GaussRational>::permutation(&[4, 5, 6, 7, 0, 1, 2, 3]);
    let unknowns: Vec<Matrix<GaussRational>> = (0..64)
        .flat_map(|e| {
            [GaussRational::one(), GaussRational::from_ints(0, 1)].map(|z| {
                let mut m = Matrix::zeros(8, 8);
                m.set(e / 8, e % 8, z);
                m
            })
        })
        .collect();
    let equations: Vec<Vector<Rational>> = unknowns
        .iter()
        .map(|j| {
            let mut eq = real_vector(&j.mul(&sigma).sub(&sigma.mul(&j.conj())));
            for r in 0..8 {
                for c in 0..8 {
                    if (r < 4) == (c < 4) {
                        eq.extend([j.get(r, c).re.clone(), j.get(r, c).im.clone()]);
                    }
                }
            }
            eq
        })
        .collect();
    let kernel = Matrix::from_columns(&equations).kernel();
    let general = Subspace::from_vectors(
        128,
        kernel.iter().map(|c| {
            let mut m = Matrix::zeros(8, 8);
            for (ck, u) in c.iter().zip(&unknowns) {
                m.axpy(&GaussRational::real(ck.clone()), u);
            }
            real_vector(&m)
        }),
    );
    let patterns = Subspace::from_vectors(
        128,
        (1..=16).flat_map(|k| {
            [GaussRational::one(), GaussRational::from_ints(0, 1)]
                .map(|z| real_vector(&pattern(|t| if t == k { z.clone() } else { GaussRational::zero() })))
        }),
    );
    (general, patterns)
}
