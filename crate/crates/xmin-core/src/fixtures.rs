//! Printed reference data shipped with the crate.
//!
//! Every fixture is a plain-text table: `#` starts a comment, blank lines are
//! ignored, `[name args..]` opens a section and every other line is one entry.

use std::collections::BTreeMap;

use crate::error::XminError;
use crate::grassmann::{adjacent, parse_summand, Covector3, IdentityTarget, PrintedIdentity, TriIndex, TriVector};
use crate::octonion::{BasisTag, Form};
use crate::scalars::{vars, GaussQ, MPoly, Matrix};
use crate::torus::{Character, OneParamSubgroup};

pub const FORMS: &str = include_str!("../fixtures/forms.txt");
pub const LINEAR_EQUATIONS: &str = include_str!("../fixtures/linear_equations.txt");
pub const TILDE_EQUATIONS: &str = include_str!("../fixtures/tilde_equations.txt");
pub const CHART_123: &str = include_str!("../fixtures/chart_123.txt");
pub const JACOBIAN_123: &str = include_str!("../fixtures/jacobian_123.txt");
pub const TANGENT_BASIS_123: &str = include_str!("../fixtures/tangent_basis_123.txt");
pub const WEIGHT_TABLE: &str = include_str!("../fixtures/weight_table.txt");
pub const FIXED_POINTS: &str = include_str!("../fixtures/fixed_points.txt");
pub const BB_WEIGHTS: &str = include_str!("../fixtures/bb_weights.txt");
pub const POINCARE: &str = include_str!("../fixtures/poincare.txt");
pub const ORBITS: &str = include_str!("../fixtures/orbits.txt");
pub const UNIPOTENT: &str = include_str!("../fixtures/unipotent.txt");
pub const UNIPOTENT_FIXED: &str = include_str!("../fixtures/unipotent_fixed.txt");
pub const TORUS_ACTION: &str = include_str!("../fixtures/torus_action.txt");
pub const KNOWN_DISCREPANCIES: &str = include_str!("../fixtures/known_discrepancies.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub number: usize,
    pub text: String,
}

impl Line {
    pub fn tokens(&self) -> Vec<&str> {
        self.text.split_whitespace().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    /// Header tokens; empty for entries before the first header.
    pub header: Vec<String>,
    pub lines: Vec<Line>,
}

impl Section {
    pub fn name(&self) -> &str {
        self.header.first().map(String::as_str).unwrap_or("")
    }

    pub fn arg(&self, k: usize) -> Option<&str> {
        self.header.get(k + 1).map(String::as_str)
    }
}

pub fn parse(text: &str) -> Result<Vec<Section>, XminError> {
    let mut out = vec![Section { header: Vec::new(), lines: Vec::new() }];
    for (n, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(rest) = body.strip_prefix('[') {
            let inner = rest
                .strip_suffix(']')
                .ok_or_else(|| XminError::Parse(format!("line {}: unterminated section header", n + 1)))?;
            out.push(Section { header: inner.split_whitespace().map(str::to_string).collect(), lines: Vec::new() });
        } else {
            out.last_mut().expect("nonempty").lines.push(Line { number: n + 1, text: body.to_string() });
        }
    }
    out.retain(|s| !(s.header.is_empty() && s.lines.is_empty()));
    Ok(out)
}

fn fail(file: &str, line: &Line, msg: impl Into<String>) -> XminError {
    XminError::Fixture { file: file.to_string(), line: line.number, msg: msg.into() }
}

fn field<T: std::str::FromStr>(file: &str, line: &Line, k: usize) -> Result<T, XminError> {
    line.tokens()
        .get(k)
        .ok_or_else(|| fail(file, line, format!("missing field {}", k + 1)))?
        .parse()
        .map_err(|_| fail(file, line, format!("bad field {}", k + 1)))
}

fn load(file: &str, text: &str) -> Result<Vec<Section>, XminError> {
    parse(text).map_err(|e| XminError::Fixture { file: file.to_string(), line: 0, msg: e.to_string() })
}

fn entries(file: &str, sec: &Section) -> Result<Vec<(TriIndex, GaussQ)>, XminError> {
    sec.lines.iter().map(|l| Ok((field(file, l, 0)?, field(file, l, 1)?))).collect()
}

fn form_section(file: &str, sec: &Section, degree: usize) -> Result<Form, XminError> {
    let terms = sec
        .lines
        .iter()
        .map(|l| {
            let idx: String = field(file, l, 0)?;
            let digits: Option<Vec<u8>> = idx.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect();
            let digits = digits.filter(|d| d.len() == degree).ok_or_else(|| fail(file, l, "bad index"))?;
            Ok((digits, field(file, l, 1)?))
        })
        .collect::<Result<Vec<_>, XminError>>()?;
    Ok(Form::from_terms(degree, terms))
}

/// Printed φ, *φ and the seven components of χ.
#[derive(Clone, Debug)]
pub struct PrintedForms {
    pub phi: Form,
    pub star_phi: Form,
    pub chi: Vec<Form>,
}

pub fn forms() -> Result<PrintedForms, XminError> {
    let f = "forms.txt";
    let secs = load(f, FORMS)?;
    let get = |name: &str| secs.iter().find(|s| s.name() == name);
    let phi = form_section(f, get("phi").ok_or_else(|| missing(f, "phi"))?, 3)?;
    let star_phi = form_section(f, get("star_phi").ok_or_else(|| missing(f, "star_phi"))?, 4)?;
    let chi = secs.iter().filter(|s| s.name() == "chi").map(|s| form_section(f, s, 3)).collect::<Result<Vec<_>, _>>()?;
    Ok(PrintedForms { phi, star_phi, chi })
}

fn missing(file: &str, what: &str) -> XminError {
    XminError::Fixture { file: file.to_string(), line: 0, msg: format!("missing section [{what}]") }
}

fn covectors(file: &str, text: &str, basis: BasisTag) -> Result<Vec<Covector3>, XminError> {
    load(file, text)?
        .iter()
        .filter(|s| s.name() == "f")
        .map(|s| Ok(Covector3::from_terms(basis, entries(file, s)?)))
        .collect()
}

/// The printed hyperplanes in E-basis Plücker coordinates.
pub fn linear_equations() -> Result<Vec<Covector3>, XminError> {
    covectors("linear_equations.txt", LINEAR_EQUATIONS, BasisTag::E)
}

/// The printed hyperplanes in tilde-basis Plücker coordinates.
pub fn tilde_equations() -> Result<Vec<Covector3>, XminError> {
    covectors("tilde_equations.txt", TILDE_EQUATIONS, BasisTag::Tilde)
}

/// Printed identities on `U_123`; `[form m]` targets use the printed hyperplane `m`.
pub fn chart_123() -> Result<Vec<PrintedIdentity>, XminError> {
    let f = "chart_123.txt";
    let forms = linear_equations()?;
    load(f, CHART_123)?
        .iter()
        .map(|s| {
            let arg = s.arg(0).ok_or_else(|| XminError::Fixture { file: f.into(), line: 0, msg: "bare section".into() })?;
            let bad = |m: &str| XminError::Fixture { file: f.into(), line: 0, msg: format!("[{}]: {m}", s.header.join(" ")) };
            let target = match s.name() {
                "ratio" | "expansion" => IdentityTarget::Ratio(arg.parse().map_err(|_| bad("bad triple"))?),
                "form" => {
                    let m: usize = arg.parse().map_err(|_| bad("bad form number"))?;
                    IdentityTarget::Form(forms.get(m.wrapping_sub(1)).cloned().ok_or_else(|| bad("no such form"))?)
                }
                _ => return Err(bad("unknown section")),
            };
            let label = match s.name() {
                "ratio" => format!("q{arg}"),
                "expansion" => format!("q{arg} expansion"),
                _ => format!("f{arg}"),
            };
            let summands = s
                .lines
                .iter()
                .map(|l| parse_summand(&l.text).map_err(|e| fail(f, l, e.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(PrintedIdentity { label, target, summands })
        })
        .collect()
}

/// The printed 7×12 Jacobian at the tilde point 123, columns in lex order of the adjacent triples.
pub fn jacobian_123() -> Result<Matrix<GaussQ>, XminError> {
    let f = "jacobian_123.txt";
    let cols = adjacent(TriIndex::new(1, 2, 3)?);
    let mut m = Matrix::zeros(7, 12);
    for sec in load(f, JACOBIAN_123)? {
        for l in &sec.lines {
            let r: usize = field(f, l, 0)?;
            let t: TriIndex = field(f, l, 1)?;
            let c = cols.iter().position(|x| *x == t).ok_or_else(|| fail(f, l, "column not adjacent to 123"))?;
            if !(1..=7).contains(&r) {
                return Err(fail(f, l, "row out of range"));
            }
            m.set(r - 1, c, field(f, l, 2)?);
        }
    }
    Ok(m)
}

/// The printed tangent basis at the tilde point 123, as vectors over the 12 adjacent triples.
pub fn tangent_basis_123() -> Result<Vec<Vec<GaussQ>>, XminError> {
    let f = "tangent_basis_123.txt";
    let cols = adjacent(TriIndex::new(1, 2, 3)?);
    load(f, TANGENT_BASIS_123)?
        .iter()
        .filter(|s| s.name() == "vector")
        .map(|s| {
            let mut v = vec![GaussQ::zero(); 12];
            for l in &s.lines {
                let t: TriIndex = field(f, l, 0)?;
                let c = cols.iter().position(|x| *x == t).ok_or_else(|| fail(f, l, "not adjacent to 123"))?;
                v[c] = field(f, l, 1)?;
            }
            Ok(v)
        })
        .collect()
}

fn characters(file: &str, text: &str) -> Result<Vec<(TriIndex, Character)>, XminError> {
    load(file, text)?
        .iter()
        .flat_map(|s| s.lines.iter())
        .map(|l| Ok((field(file, l, 0)?, Character(field(file, l, 1)?, field(file, l, 2)?))))
        .collect()
}

/// The printed weight table, rows in printed order.
pub fn weight_table() -> Result<Vec<(TriIndex, Character)>, XminError> {
    characters("weight_table.txt", WEIGHT_TABLE)
}

/// The printed list of torus-fixed points with their characters.
pub fn fixed_points() -> Result<Vec<(TriIndex, Character)>, XminError> {
    characters("fixed_points.txt", FIXED_POINTS)
}

/// Printed tangent weights per fixed point, in printed order.
pub fn bb_weights() -> Result<(OneParamSubgroup, BTreeMap<TriIndex, Vec<i64>>), XminError> {
    let f = "bb_weights.txt";
    let secs = load(f, BB_WEIGHTS)?;
    let sec = secs.iter().find(|s| s.name() == "subgroup").ok_or_else(|| missing(f, "subgroup"))?;
    let num = |k: usize| -> Result<i32, XminError> {
        sec.arg(k).and_then(|a| a.parse().ok()).ok_or_else(|| missing(f, "subgroup c d"))
    };
    let g = OneParamSubgroup { c: num(0)?, d: num(1)? };
    let mut out: BTreeMap<TriIndex, Vec<i64>> = BTreeMap::new();
    for l in &sec.lines {
        out.entry(field(f, l, 0)?).or_default().push(field(f, l, 1)?);
    }
    Ok((g, out))
}

fn coefficient_list(file: &str, sec: &Section) -> Result<Vec<i64>, XminError> {
    let mut out = Vec::new();
    for l in &sec.lines {
        let d: usize = field(file, l, 0)?;
        if out.len() <= d {
            out.resize(d + 1, 0);
        }
        out[d] += field::<i64>(file, l, 1)?;
    }
    Ok(out)
}

/// Printed Poincaré coefficients of X_min and of the wonderful compactification.
pub fn poincare() -> Result<(Vec<i64>, Vec<i64>), XminError> {
    let f = "poincare.txt";
    let secs = load(f, POINCARE)?;
    let get = |n: &str| secs.iter().find(|s| s.name() == n).ok_or_else(|| missing(f, n));
    Ok((coefficient_list(f, get("xmin")?)?, coefficient_list(f, get("wonderful")?)?))
}

/// The printed orbit data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedOrbits {
    pub nodes: Vec<String>,
    pub edges: Vec<(String, String)>,
    pub support: Vec<String>,
    /// `(J, Δ_I(J))` pairs as printed.
    pub delta: Vec<(Vec<String>, Vec<String>)>,
    pub count: usize,
}

pub fn orbits() -> Result<PrintedOrbits, XminError> {
    let f = "orbits.txt";
    let mut out = PrintedOrbits { nodes: vec![], edges: vec![], support: vec![], delta: vec![], count: 0 };
    let set = |xs: &[&str]| -> Vec<String> { xs.iter().filter(|x| **x != "-").map(|x| x.to_string()).collect() };
    for sec in load(f, ORBITS)? {
        for l in &sec.lines {
            let t = l.tokens();
            match (sec.name(), t.first().copied()) {
                ("diagram", Some("nodes")) => out.nodes = set(&t[1..]),
                ("diagram", Some("edge")) if t.len() == 3 => out.edges.push((t[1].into(), t[2].into())),
                ("diagram", Some("support")) => out.support = set(&t[1..]),
                ("delta", _) => {
                    let k = t.iter().position(|x| *x == "->").ok_or_else(|| fail(f, l, "missing ->"))?;
                    out.delta.push((set(&t[..k]), set(&t[k + 1..])));
                }
                ("orbits", Some("count")) => out.count = field(f, l, 1)?,
                _ => return Err(fail(f, l, "unexpected entry")),
            }
        }
    }
    Ok(out)
}

/// One printed entry `coeff · u^power` of a unipotent matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentEntry {
    pub row: usize,
    pub col: usize,
    pub coeff: GaussQ,
    pub power: u32,
}

/// The two printed `[g_u]` matrices over `ℚ(i)[u]`, indexed as displayed.
pub fn unipotent() -> Result<BTreeMap<String, Matrix<MPoly>>, XminError> {
    let f = "unipotent.txt";
    let v = vars(&["u"]);
    let mut out = BTreeMap::new();
    for sec in load(f, UNIPOTENT)? {
        let mut m = Matrix::from_fn(7, 7, |_, _| MPoly::zero(&v, false));
        for l in &sec.lines {
            let e = UnipotentEntry { row: field(f, l, 0)?, col: field(f, l, 1)?, coeff: field(f, l, 2)?, power: field(f, l, 3)? };
            if !(1..=7).contains(&e.row) || !(1..=7).contains(&e.col) {
                return Err(fail(f, l, "index out of range"));
            }
            let term = MPoly::monomial(&v, vec![e.power as i32], e.coeff, false)?;
            let cur = m.get(e.row - 1, e.col - 1).clone();
            m.set(e.row - 1, e.col - 1, &cur + &term);
        }
        out.insert(sec.name().to_string(), m);
    }
    Ok(out)
}

/// The printed torus action: entry `(r, c)` is the coefficient of `e_r` in `t(e_c)`, over `ℚ(i)[λ^±, μ^±]`.
pub fn torus_action() -> Result<Matrix<MPoly>, XminError> {
    let f = "torus_action.txt";
    let v = vars(&["λ", "μ"]);
    let mut m = Matrix::from_fn(7, 7, |_, _| MPoly::zero(&v, true));
    for sec in load(f, TORUS_ACTION)? {
        for l in &sec.lines {
            let c: usize = field(f, l, 0)?;
            let r: usize = field(f, l, 1)?;
            if !(1..=7).contains(&r) || !(1..=7).contains(&c) {
                return Err(fail(f, l, "index out of range"));
            }
            let term = MPoly::monomial(&v, vec![field(f, l, 3)?, field(f, l, 4)?], field(f, l, 2)?, true)?;
            let cur = m.get(r - 1, c - 1).clone();
            m.set(r - 1, c - 1, &cur + &term);
        }
    }
    Ok(m)
}

/// Printed unipotent-fixed points as `(action, trivector)`.
pub fn unipotent_fixed() -> Result<Vec<(String, TriVector)>, XminError> {
    let f = "unipotent_fixed.txt";
    load(f, UNIPOTENT_FIXED)?
        .iter()
        .map(|s| Ok((s.name().to_string(), TriVector::from_terms(BasisTag::E, entries(f, s)?))))
        .collect()
}

/// Check names whose discrepancy status is expected.
pub fn known_discrepancies() -> Result<Vec<String>, XminError> {
    Ok(load("known_discrepancies.txt", KNOWN_DISCREPANCIES)?
        .iter()
        .flat_map(|s| s.lines.iter())
        .map(|l| l.tokens()[0].to_string())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parser_handles_sections_and_comments() {
        let secs = parse("# c\n1 2\n[a x y]\n  3 4 # tail\n\n[b]\n").unwrap();
        assert_eq!(secs.len(), 3);
        assert_eq!(secs[0].lines[0].text, "1 2");
        assert_eq!(secs[1].name(), "a");
        assert_eq!(secs[1].arg(1), Some("y"));
        assert_eq!(secs[1].lines[0].tokens(), vec!["3", "4"]);
        assert!(secs[2].lines.is_empty());
        assert!(parse("[open\n").is_err());
    }

    #[test]
    fn all_fixtures_load() {
        let fm = forms().unwrap();
        assert_eq!(fm.phi.terms.len(), 7);
        assert_eq!(fm.star_phi.terms.len(), 7);
        assert_eq!(fm.chi.iter().map(|c| c.terms.len()).sum::<usize>(), 28);
        assert_eq!(linear_equations().unwrap().len(), 7);
        assert_eq!(tilde_equations().unwrap().len(), 7);
        assert_eq!(chart_123().unwrap().len(), 30);
        assert_eq!(jacobian_123().unwrap().rank(), 4);
        assert_eq!(tangent_basis_123().unwrap().len(), 8);
        assert_eq!(weight_table().unwrap().len(), 35);
        assert_eq!(fixed_points().unwrap().len(), 15);
        let (g, w) = bb_weights().unwrap();
        assert_eq!((g.c, g.d), (10, 1));
        assert_eq!(w.len(), 15);
        assert_eq!(w.values().map(Vec::len).sum::<usize>(), 14 * 8 + 9);
        let (x, won) = poincare().unwrap();
        assert_eq!(x, vec![1, 1, 2, 2, 3, 2, 2, 1, 1]);
        assert_eq!(won, vec![1, 2, 4, 4, 5, 4, 4, 2, 1]);
        assert_eq!(orbits().unwrap().count, 3);
        assert_eq!(unipotent().unwrap().len(), 2);
        assert_eq!(torus_action().unwrap().rows(), 7);
        assert_eq!(unipotent_fixed().unwrap().len(), 4);
        assert!(!known_discrepancies().unwrap().is_empty());
    }
}
