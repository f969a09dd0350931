//! Affine charts `U_I = {p_I ≠ 0}` of Gr(3,7), their canonical sections, and an audit of
//! printed chart identities against the minors of the section.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{plucker_relations, Covector3, TriIndex, TriVector};
use crate::error::XminError;
use crate::scalars::{vars, GaussQ, MPoly, Matrix, Vars};

/// The 12 triples sharing exactly two indices with `chart`, in lex order.
pub fn adjacent(chart: TriIndex) -> Vec<TriIndex> {
    TriIndex::all().iter().copied().filter(|t| t.overlap(&chart) == 2).collect()
}

/// Local coordinates `q_J = p_J / p_I` of a point of `U_I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartPoint {
    pub chart: TriIndex,
    pub q: BTreeMap<TriIndex, GaussQ>,
}

pub fn chart_coords(w: &TriVector, chart: TriIndex) -> Result<ChartPoint, XminError> {
    let p = w.get(chart);
    if p.is_zero() {
        return Err(XminError::NotInChart(chart.to_string()));
    }
    let inv = p.inv()?;
    let q = adjacent(chart).into_iter().map(|t| (t, w.get(t) * &inv)).collect();
    Ok(ChartPoint { chart, q })
}

/// The section of `U_I` with an identity block in columns `I`, arranged so that the minor on
/// every adjacent triple `J` is exactly the variable `q_J`.
#[derive(Clone, Debug)]
pub struct ChartParam {
    pub chart: TriIndex,
    pub vars: Vars,
    pub adjacent: Vec<TriIndex>,
    pub matrix: Matrix<MPoly>,
}

impl ChartParam {
    /// Minors of the section on all 35 triples, i.e. `p_K / p_I` as polynomials.
    pub fn minors(&self) -> Vec<MPoly> {
        TriIndex::all().iter().map(|t| self.matrix.minor(&[0, 1, 2], &t.indices().map(|x| (x - 1) as usize))).collect()
    }

    pub fn var_index(&self, t: TriIndex) -> Option<usize> {
        self.adjacent.iter().position(|a| *a == t)
    }

    pub fn origin(&self) -> Vec<GaussQ> {
        vec![GaussQ::zero(); self.adjacent.len()]
    }
}

pub fn chart_param(chart: TriIndex) -> ChartParam {
    let adj = adjacent(chart);
    let names: Vec<String> = adj.iter().map(|t| format!("q{t}")).collect();
    let v = vars(&names);
    let zero = MPoly::zero(&v, false);
    let one = MPoly::constant(&v, GaussQ::one(), false);
    let idx = chart.indices();
    let mut m = Matrix::from_fn(3, 7, |_, _| zero.clone());
    for (a, &i) in idx.iter().enumerate() {
        m.set(a, (i - 1) as usize, one.clone());
    }
    for j in 1..=7u8 {
        if chart.contains(j) {
            continue;
        }
        for a in 0..3 {
            let mut seq = idx;
            seq[a] = j;
            let (sign, t) = TriIndex::sorted_with_sign(seq).expect("distinct");
            let k = adj.iter().position(|x| *x == t).expect("adjacent");
            let var = MPoly::var(&v, k, false);
            m.set(a, (j - 1) as usize, if sign > 0 { var } else { -&var });
        }
    }
    ChartParam { chart, vars: v, adjacent: adj, matrix: m }
}

/// Arithmetic expression in Plücker ratios `qabc`, used for printed chart identities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ChartExpr {
    Const(GaussQ),
    Ratio(TriIndex),
    Neg(Box<ChartExpr>),
    Sum(Vec<ChartExpr>),
    Prod(Vec<ChartExpr>),
}

impl ChartExpr {
    /// Evaluates with `q_K` replaced by the minor `minors[K]`.
    pub fn eval(&self, minors: &[MPoly]) -> MPoly {
        let vars = minors[0].vars();
        match self {
            ChartExpr::Const(c) => MPoly::constant(vars, c.clone(), false),
            ChartExpr::Ratio(t) => minors[t.rank()].clone(),
            ChartExpr::Neg(e) => -&e.eval(minors),
            ChartExpr::Sum(xs) => xs.iter().fold(MPoly::zero(vars, false), |a, x| &a + &x.eval(minors)),
            ChartExpr::Prod(xs) => {
                xs.iter().fold(MPoly::constant(vars, GaussQ::one(), false), |a, x| &a * &x.eval(minors))
            }
        }
    }

    pub fn negated(&self) -> ChartExpr {
        match self {
            ChartExpr::Neg(e) => (**e).clone(),
            other => ChartExpr::Neg(Box::new(other.clone())),
        }
    }

    fn is_negative(&self) -> bool {
        matches!(self, ChartExpr::Neg(_))
    }
}

impl fmt::Display for ChartExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChartExpr::Const(c) if c.is_real() => write!(f, "{c}"),
            ChartExpr::Const(c) => write!(f, "({c})"),
            ChartExpr::Ratio(t) => write!(f, "q{t}"),
            ChartExpr::Neg(e) => match **e {
                ChartExpr::Sum(_) => write!(f, "-({e})"),
                _ => write!(f, "-{e}"),
            },
            ChartExpr::Sum(xs) => {
                for (n, x) in xs.iter().enumerate() {
                    match (n, x) {
                        (0, _) => write!(f, "{x}")?,
                        (_, ChartExpr::Neg(inner)) => write!(f, " - {inner}")?,
                        _ => write!(f, " + {x}")?,
                    }
                }
                Ok(())
            }
            ChartExpr::Prod(xs) => {
                let parts: Vec<String> = xs
                    .iter()
                    .map(|x| match x {
                        ChartExpr::Sum(_) => format!("({x})"),
                        _ => x.to_string(),
                    })
                    .collect();
                write!(f, "{}", parts.join("*"))
            }
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.s.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> XminError {
        XminError::Parse(format!("{msg} at offset {} in `{}`", self.pos, String::from_utf8_lossy(self.s)))
    }

    fn expr(&mut self) -> Result<ChartExpr, XminError> {
        let mut items = Vec::new();
        let mut neg = false;
        match self.peek() {
            Some(b'-') => {
                neg = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            items.push(if neg { t.negated() } else { t });
            match self.peek() {
                Some(b'+') => {
                    neg = false;
                    self.pos += 1;
                }
                Some(b'-') => {
                    neg = true;
                    self.pos += 1;
                }
                _ => break,
            }
        }
        Ok(if items.len() == 1 { items.pop().expect("one item") } else { ChartExpr::Sum(items) })
    }

    fn term(&mut self) -> Result<ChartExpr, XminError> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    factors.push(self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let ChartExpr::Const(d) = self.factor()? else {
                        return Err(self.err("division by a non-constant"));
                    };
                    factors.push(ChartExpr::Const(GaussQ::one().checked_div(&d)?));
                }
                _ => break,
            }
        }
        let mut coeff = GaussQ::one();
        let mut rest = Vec::new();
        for f in factors {
            match f {
                ChartExpr::Const(c) => coeff = &coeff * &c,
                other => rest.push(other),
            }
        }
        if rest.is_empty() {
            return Ok(ChartExpr::Const(coeff));
        }
        if !coeff.is_one() {
            rest.insert(0, ChartExpr::Const(coeff));
        }
        Ok(if rest.len() == 1 { rest.pop().expect("one factor") } else { ChartExpr::Prod(rest) })
    }

    fn factor(&mut self) -> Result<ChartExpr, XminError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'q') => {
                self.pos += 1;
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
                Ok(ChartExpr::Ratio(digits.parse()?))
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(ChartExpr::Const(GaussQ::i()))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: i64 = std::str::from_utf8(&self.s[start..self.pos])
                    .expect("ascii")
                    .parse()
                    .map_err(|_| self.err("integer overflow"))?;
                Ok(ChartExpr::Const(GaussQ::from_int(n)))
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.factor()?.negated())
            }
            _ => Err(self.err("unexpected token")),
        }
    }
}

/// Parses one summand such as `-q124*q135` or `(-q124*q135 - q134*q125)*q236`.
pub fn parse_summand(s: &str) -> Result<ChartExpr, XminError> {
    let mut p = Parser { s: s.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Left-hand side of a printed chart identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityTarget {
    /// A Plücker ratio `q_K`.
    Ratio(TriIndex),
    /// A linear form composed with the chart minors.
    Form(Covector3),
}

/// A printed identity `target = Σ summands` on a chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedIdentity {
    pub label: String,
    pub target: IdentityTarget,
    pub summands: Vec<ChartExpr>,
}

/// Outcome of checking one printed identity as a polynomial identity in the chart variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditLine {
    pub label: String,
    pub holds: bool,
    pub printed: String,
    /// Polynomial obtained from the minors of the chart section.
    pub oracle: String,
    /// Printed summands with signs adjusted to match the oracle, if such signs exist.
    pub corrected: Option<String>,
}

fn join_summands(xs: &[ChartExpr]) -> String {
    let mut s = String::new();
    for (n, x) in xs.iter().enumerate() {
        match (n, x.is_negative()) {
            (0, _) => s.push_str(&x.to_string()),
            (_, true) => s.push_str(&format!(" - {}", x.negated())),
            (_, false) => s.push_str(&format!(" + {x}")),
        }
    }
    s
}

fn target_poly(target: &IdentityTarget, minors: &[MPoly]) -> MPoly {
    match target {
        IdentityTarget::Ratio(t) => minors[t.rank()].clone(),
        IdentityTarget::Form(f) => {
            let v = minors[0].vars();
            TriIndex::all()
                .iter()
                .filter(|t| !f.get(**t).is_zero())
                .fold(MPoly::zero(v, false), |a, t| &a + &minors[t.rank()].scale(f.get(*t)))
        }
    }
}

/// Checks each printed identity on chart `U_I`; a failing line gets the sign pattern that
/// makes it hold, when one exists.
pub fn chart_identity_audit(chart: TriIndex, printed: &[PrintedIdentity]) -> Vec<AuditLine> {
    let param = chart_param(chart);
    let minors = param.minors();
    printed
        .iter()
        .map(|id| {
            let target = target_poly(&id.target, &minors);
            let polys: Vec<MPoly> = id.summands.iter().map(|s| s.eval(&minors)).collect();
            let zero = MPoly::zero(&param.vars, false);
            let sum = polys.iter().fold(zero.clone(), |a, p| &a + p);
            let holds = sum == target;
            let corrected = if holds {
                None
            } else {
                let n = polys.len();
                (1u64..(1u64 << n.min(20)))
                    .find(|mask| {
                        let s = polys
                            .iter()
                            .enumerate()
                            .fold(zero.clone(), |a, (k, p)| if mask >> k & 1 == 1 { &a - p } else { &a + p });
                        s == target
                    })
                    .map(|mask| {
                        let fixed: Vec<ChartExpr> = id
                            .summands
                            .iter()
                            .enumerate()
                            .map(|(k, s)| if mask >> k & 1 == 1 { s.negated() } else { s.clone() })
                            .collect();
                        join_summands(&fixed)
                    })
            };
            AuditLine {
                label: id.label.clone(),
                holds,
                printed: join_summands(&id.summands),
                oracle: target.to_string(),
                corrected,
            }
        })
        .collect()
}

/// Whether every Plücker relation vanishes identically on the minors of the chart section.
pub fn relations_hold_on_chart(chart: TriIndex) -> bool {
    let minors = chart_param(chart).minors();
    plucker_relations().iter().all(|r| r.eval(&minors).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::BasisTag;

    fn t(s: &str) -> TriIndex {
        s.parse().unwrap()
    }

    #[test]
    fn chart_coordinate_examples() {
        let w = TriVector::basis_vector(BasisTag::E, t("123"));
        let p = chart_coords(&w, t("123")).unwrap();
        assert_eq!(p.q.len(), 12);
        assert!(p.q.values().all(GaussQ::is_zero));

        let w = TriVector::from_terms(BasisTag::E, [(t("123"), GaussQ::one()), (t("124"), GaussQ::one())]);
        let p = chart_coords(&w, t("123")).unwrap();
        assert_eq!(p.q[&t("124")], GaussQ::one());
        assert_eq!(p.q.values().filter(|v| !v.is_zero()).count(), 1);

        let w = TriVector::basis_vector(BasisTag::E, t("124"));
        assert_eq!(chart_coords(&w, t("123")), Err(XminError::NotInChart("123".into())));
    }

    #[test]
    fn section_minors_are_the_variables() {
        for chart in [t("123"), t("357"), t("246")] {
            let param = chart_param(chart);
            let minors = param.minors();
            assert_eq!(minors[chart.rank()], MPoly::constant(&param.vars, GaussQ::one(), false));
            for (k, a) in param.adjacent.iter().enumerate() {
                assert_eq!(minors[a.rank()], MPoly::var(&param.vars, k, false));
            }
            assert!(relations_hold_on_chart(chart));
        }
    }

    #[test]
    fn q145_from_minors() {
        let param = chart_param(t("123"));
        let minors = param.minors();
        let expected = parse_summand("q124*q135 - q125*q134").unwrap().eval(&minors);
        assert_eq!(minors[t("145").rank()], expected);
    }

    #[test]
    fn parser_round_trip() {
        let e = parse_summand("(-q124*q135 - q134*q125)*q236").unwrap();
        assert_eq!(e.to_string(), "(-q124*q135 - q134*q125)*q236");
        assert_eq!(parse_summand("-1/2*q135").unwrap().to_string(), "-1/2*q135");
        assert_eq!(parse_summand("2*i*q124").unwrap().to_string(), "(2i)*q124");
        assert!(parse_summand("q12").is_err());
        assert!(parse_summand("q124 q135").is_err());
    }

    #[test]
    fn audit_flags_and_corrects_signs() {
        let printed = PrintedIdentity {
            label: "q145".into(),
            target: IdentityTarget::Ratio(t("145")),
            summands: vec![parse_summand("-q124*q135").unwrap(), parse_summand("-q134*q125").unwrap()],
        };
        let line = &chart_identity_audit(t("123"), &[printed])[0];
        assert!(!line.holds);
        assert_eq!(line.corrected.as_deref(), Some("q124*q135 - q134*q125"));
    }
}
