use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use super::{ComplexRing, Conjugate, GaussRational, Rational, Ring, ScalarError};

/// A polynomial generator. `x` and `conj(x)` are independent generators
/// exchanged by conjugation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Var {
    name: Arc<str>,
    conjugated: bool,
}

impl Var {
    pub fn new(name: &str) -> Var {
        Var { name: name.into(), conjugated: false }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_conjugated(&self) -> bool {
        self.conjugated
    }

    pub fn conj(&self) -> Var {
        Var { name: self.name.clone(), conjugated: !self.conjugated }
    }

    /// Alphabetic prefix and numeric suffix, so `l2 < l10`.
    fn sort_key(&self) -> (&str, u64) {
        let split = self.name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
        let (head, digits) = self.name.split_at(split);
        (head, digits.parse().unwrap_or(0))
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Var) -> Ordering {
        self.sort_key()
            .cmp(&other.sort_key())
            .then_with(|| self.name.cmp(&other.name))
            .then_with(|| self.conjugated.cmp(&other.conjugated))
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Var) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conjugated {
            write!(f, "conj({})", self.name)
        } else {
            write!(f, "{}", self.name)
        }
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Product of variables with positive exponents, sorted by variable.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (Var, u32)>) -> Monomial {
        let mut m: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in factors {
            if e > 0 {
                *m.entry(v).or_default() += e;
            }
        }
        Monomial(m.into_iter().collect())
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: &Var) -> u32 {
        self.0.iter().find(|(w, _)| w == v).map_or(0, |(_, e)| *e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => {
                        out.push((va.clone(), *ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((vb.clone(), *eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((va.clone(), ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(x), None) => {
                    out.push((*x).clone());
                    a.next();
                }
                (None, Some(y)) => {
                    out.push((*y).clone());
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::new();
        for (v, e) in &self.0 {
            let d = other.exponent(v);
            if d > *e {
                return None;
            }
            if *e > d {
                out.push((v.clone(), e - d));
            }
        }
        if other.0.iter().any(|(v, _)| self.exponent(v) == 0) {
            return None;
        }
        Some(Monomial(out))
    }

    pub fn conj(&self) -> Monomial {
        Monomial::from_factors(self.0.iter().map(|(v, e)| (v.conj(), *e)))
    }

    /// Splits off every factor on `v`, returning the exponent and the rest.
    fn extract(&self, v: &Var) -> (u32, Monomial) {
        let e = self.exponent(v);
        (e, Monomial(self.0.iter().filter(|(w, _)| w != v).cloned().collect()))
    }
}

/// Graded lexicographic.
impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial over ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, GaussRational>,
}

impl Poly {
    pub fn constant(c: GaussRational) -> Poly {
        Poly::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: GaussRational) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn var(v: Var) -> Poly {
        Poly::term(Monomial::var(v), GaussRational::one())
    }

    /// The generator called `name`.
    pub fn sym(name: &str) -> Poly {
        Poly::var(Var::new(name))
    }

    /// The conjugate generator of `name`.
    pub fn sym_conj(name: &str) -> Poly {
        Poly::var(Var::new(name).conj())
    }

    pub fn rational(q: Rational) -> Poly {
        Poly::constant(GaussRational::real(q))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().next_back().map_or(0, Monomial::degree)
    }

    pub fn as_constant(&self) -> Option<GaussRational> {
        match self.terms.len() {
            0 => Some(GaussRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.0.iter().map(|(v, _)| v.clone())).collect()
    }

    fn accumulate(&mut self, m: Monomial, c: &GaussRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign(c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussRational) -> Poly {
        if c.is_zero() {
            return Poly::default();
        }
        Poly { terms: self.terms.iter().map(|(m, d)| (m.clone(), d.mul(c))).collect() }
    }

    /// Replaces assigned generators by their values.
    pub fn substitute(&self, a: &Assignment) -> Poly {
        if a.map.is_empty() {
            return self.clone();
        }
        let mut out = Poly::default();
        let mut powers: BTreeMap<(Var, u32), Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = Vec::new();
            let mut factor = Poly::constant(c.clone());
            for (v, e) in &m.0 {
                match a.map.get(v) {
                    Some(val) => {
                        let p = powers.entry((v.clone(), *e)).or_insert_with(|| val.pow(*e));
                        factor = factor.mul(p);
                    }
                    None => rest.push((v.clone(), *e)),
                }
                if factor.is_zero() {
                    break;
                }
            }
            if factor.is_zero() {
                continue;
            }
            let rest = Monomial(rest);
            for (fm, fc) in &factor.terms {
                out.accumulate(fm.mul(&rest), fc);
            }
        }
        out
    }

    /// [`Poly::substitute`] with a raw map, validated for conjugate consistency.
    pub fn substitute_map(&self, map: &BTreeMap<Var, Poly>) -> Result<Poly, ScalarError> {
        Ok(self.substitute(&Assignment::from_map(map.clone())?))
    }

    /// Coefficient polynomial of `v^e` for each power `e` of `v`.
    pub fn collect_in(&self, v: &Var) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.extract(v);
            out.entry(e).or_default().accumulate(rest, c);
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = if c.is_real() && c.re.is_negative() {
                (true, GaussRational::real(-&c.re))
            } else {
                (false, c.clone())
            };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let coeff = if mag.is_real() { mag.to_string() } else { format!("({mag})") };
            if m.is_one() {
                write!(f, "{coeff}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{coeff}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<GaussRational> for Poly {
    fn from(c: GaussRational) -> Poly {
        Poly::constant(c)
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Poly {
        Poly::constant(n.into())
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::default()
    }
    fn one() -> Self {
        Poly::constant(GaussRational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }
    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Poly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.accumulate(ma.mul(mb), &ca.mul(cb));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }
    fn from_rational(q: &Rational) -> Self {
        Poly::rational(q.clone())
    }
    fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.accumulate(m.clone(), c);
        }
    }
    fn sub_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.accumulate(m.clone(), &c.neg());
        }
    }
}

impl Conjugate for Poly {
    fn conj(&self) -> Self {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.conj(), c.conj())).collect() }
    }
}

impl ComplexRing for Poly {
    fn from_gauss(z: &GaussRational) -> Self {
        Poly::constant(z.clone())
    }
}

/// A conjugation-consistent substitution `Var -> Poly`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Assignment {
    map: BTreeMap<Var, Poly>,
}

impl Assignment {
    pub fn new() -> Assignment {
        Assignment::default()
    }

    pub fn from_map(map: BTreeMap<Var, Poly>) -> Result<Assignment, ScalarError> {
        for (v, p) in &map {
            if let Some(q) = map.get(&v.conj()) {
                if *q != p.conj() {
                    return Err(ScalarError::InconsistentAssignment(v.name().to_string()));
                }
            }
        }
        Ok(Assignment { map })
    }

    pub fn get(&self, v: &Var) -> Option<&Poly> {
        self.map.get(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, &Poly)> {
        self.map.iter()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Binds `v := value` and `conj(v) := conj(value)`, composing with the
    /// bindings already present.
    pub fn bind(&mut self, v: Var, value: Poly) -> Result<(), ScalarError> {
        let value = value.substitute(self);
        if let Some(old) = self.map.get(&v) {
            return if *old == value {
                Ok(())
            } else {
                Err(ScalarError::AlreadyAssigned(v.to_string()))
            };
        }
        let conj_value = value.conj();
        if value.vars().contains(&v) || conj_value.vars().contains(&v.conj()) {
            return Err(ScalarError::InconsistentAssignment(v.to_string()));
        }
        let pair = Assignment::from_map(BTreeMap::from([
            (v.conj(), conj_value),
            (v.clone(), value),
        ]))?;
        for p in self.map.values_mut() {
            *p = p.substitute(&pair);
        }
        self.map.extend(pair.map);
        Ok(())
    }
}

/// Term rewriting by monomial rules `lhs -> rhs`, with `rhs` smaller in the
/// graded order so reduction terminates.
#[derive(Clone, Debug, Default)]
pub struct Reducer {
    rules: Vec<(Monomial, Poly)>,
}

impl Reducer {
    pub fn new() -> Reducer {
        Reducer::default()
    }

    pub fn rule(mut self, lhs: Monomial, rhs: Poly) -> Reducer {
        self.rules.push((lhs, rhs));
        self
    }

    /// The relation `δ(1 − λλ̄) = 1` for a formal inverse `δ`, with `δ` real:
    /// `δλλ̄ -> δ − 1` and `δ̄ -> δ`.
    pub fn unit_inverse(lambda: &str, delta: &str) -> Reducer {
        let l = Var::new(lambda);
        let d = Var::new(delta);
        Reducer::new()
            .rule(
                Monomial::from_factors([(d.clone(), 1), (l.clone(), 1), (l.conj(), 1)]),
                Poly::var(d.clone()).sub(&Poly::one()),
            )
            .rule(Monomial::var(d.conj()), Poly::var(d))
    }

    pub fn is_trivial(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn reduce(&self, p: &Poly) -> Poly {
        if self.rules.is_empty() {
            return p.clone();
        }
        let mut out = Poly::default();
        let mut stack: Vec<(Monomial, GaussRational)> =
            p.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        while let Some((m, c)) = stack.pop() {
            let hit = self.rules.iter().find_map(|(lhs, rhs)| m.div(lhs).map(|rest| (rest, rhs)));
            match hit {
                Some((rest, rhs)) => {
                    for (rm, rc) in &rhs.terms {
                        stack.push((rest.mul(rm), c.mul(rc)));
                    }
                }
                None => out.accumulate(m, &c),
            }
        }
        out
    }
}
