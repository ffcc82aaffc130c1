//! Problem-file parser.
//!
//! Line-oriented grammar, `#` starts a comment:
//!
//! ```text
//! p = 3
//! vars = x, y, z, w
//! quotient = x*y - z*w
//! ideal a = x^2, x*y
//! ```
//!
//! Polynomial expressions support `+ - * ^`, integer coefficients, and
//! parentheses. The name `m` is reserved for the irrelevant maximal ideal.
//! Quotient and ideal generators must be homogeneous.

use fthresh_core::{Error, FieldSpec, Ideal, Limits, Polynomial, QuotientContext, Result};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq)]
pub struct ProblemFile {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub quotient_gens: Vec<Polynomial>,
    pub ideals: BTreeMap<String, Vec<Polynomial>>,
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<ProblemFile> {
        Parser::new(text).parse()
    }

    pub fn context(&self, limits: Limits) -> Result<QuotientContext> {
        QuotientContext::new(
            self.field,
            self.vars.clone(),
            self.quotient_gens.clone(),
            limits,
        )
    }

    /// Resolves a named ideal; `m` is the irrelevant maximal ideal.
    pub fn ideal(&self, name: &str, ctx: &QuotientContext) -> Result<Ideal> {
        if name == "m" {
            return Ok(ctx.maximal_ideal());
        }
        let gens = self.ideals.get(name).ok_or_else(|| {
            Error::InvalidParameter(format!("unknown ideal name `{name}`"))
        })?;
        Ideal::new(self.field, self.vars.len(), gens.clone())
    }

    /// Canonical text form; `parse(render(p))` reproduces `p`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("p = {}\n", self.field.p()));
        out.push_str(&format!("vars = {}\n", self.vars.join(", ")));
        if !self.quotient_gens.is_empty() {
            let gens: Vec<String> = self
                .quotient_gens
                .iter()
                .map(|g| g.display(&self.vars).to_string())
                .collect();
            out.push_str(&format!("quotient = {}\n", gens.join(", ")));
        }
        for (name, gens) in &self.ideals {
            let gens: Vec<String> = gens
                .iter()
                .map(|g| g.display(&self.vars).to_string())
                .collect();
            out.push_str(&format!("ideal {name} = {}\n", gens.join(", ")));
        }
        out
    }
}

struct Parser<'a> {
    lines: Vec<&'a str>,
}

struct LineCursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col_offset: usize,
    _text: &'a str,
}

impl<'a> LineCursor<'a> {
    fn new(text: &'a str, line: usize) -> Self {
        Self::with_offset(text, line, 0)
    }

    fn with_offset(text: &'a str, line: usize, col_offset: usize) -> Self {
        LineCursor {
            chars: text.chars().collect(),
            pos: 0,
            line,
            col_offset,
            _text: text,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col_offset + self.pos + 1,
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an identifier"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        if s.chars().next().unwrap().is_ascii_digit() {
            return Err(self.err(format!("identifier `{s}` cannot start with a digit")));
        }
        Ok(s)
    }

    fn natural(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<u64>()
            .map_err(|_| self.err(format!("number `{s}` is too large")))
    }
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            lines: text.lines().collect(),
        }
    }

    fn parse(&self) -> Result<ProblemFile> {
        let mut p: Option<(u64, usize)> = None;
        let mut vars: Option<(Vec<String>, usize)> = None;
        let mut quotient_lines: Vec<(usize, usize, String)> = Vec::new();
        let mut ideal_lines: Vec<(usize, usize, String, String)> = Vec::new();

        for (idx, raw) in self.lines.iter().enumerate() {
            let line_no = idx + 1;
            let content = match raw.find('#') {
                Some(o) => &raw[..o],
                None => raw,
            };
            if content.trim().is_empty() {
                continue;
            }
            let mut cur = LineCursor::new(content, line_no);
            let key = cur.ident()?;
            match key.as_str() {
                "p" => {
                    cur.expect('=')?;
                    let value = cur.natural()?;
                    if !cur.at_end() {
                        return Err(cur.err("unexpected trailing input after the prime"));
                    }
                    if p.is_some() {
                        return Err(cur.err("`p` was already set"));
                    }
                    p = Some((value, line_no));
                }
                "vars" => {
                    cur.expect('=')?;
                    let mut names = Vec::new();
                    loop {
                        names.push(cur.ident()?);
                        if !cur.eat(',') {
                            break;
                        }
                    }
                    if !cur.at_end() {
                        return Err(cur.err("unexpected trailing input after the variable list"));
                    }
                    if vars.is_some() {
                        return Err(cur.err("`vars` was already set"));
                    }
                    vars = Some((names, line_no));
                }
                "quotient" => {
                    cur.expect('=')?;
                    let rest: String = cur.chars[cur.pos..].iter().collect();
                    quotient_lines.push((line_no, cur.pos, rest));
                }
                "ideal" => {
                    let name = cur.ident()?;
                    cur.expect('=')?;
                    let rest: String = cur.chars[cur.pos..].iter().collect();
                    ideal_lines.push((line_no, cur.pos, name, rest));
                }
                other => {
                    return Err(cur.err(format!(
                        "unknown directive `{other}` (expected p, vars, quotient or ideal)"
                    )));
                }
            }
        }

        let (p_value, _) = p.ok_or(Error::Parse {
            line: 1,
            col: 1,
            msg: "missing `p = <prime>`".into(),
        })?;
        let field = FieldSpec::new(p_value)?;
        let (vars, _) = vars.ok_or(Error::Parse {
            line: 1,
            col: 1,
            msg: "missing `vars = ...`".into(),
        })?;
        {
            let mut seen = std::collections::BTreeSet::new();
            for v in &vars {
                if v == "m" {
                    return Err(Error::Parse {
                        line: 1,
                        col: 1,
                        msg: "`m` is reserved for the maximal ideal".into(),
                    });
                }
                if !seen.insert(v.clone()) {
                    return Err(Error::Parse {
                        line: 1,
                        col: 1,
                        msg: format!("duplicate variable `{v}`"),
                    });
                }
            }
        }

        let mut quotient_gens = Vec::new();
        for (line_no, offset, text) in quotient_lines {
            for g in parse_poly_list(&text, line_no, offset, field, &vars)? {
                if !g.is_homogeneous() {
                    return Err(Error::NotHomogeneousInput(format!(
                        "quotient generator {}",
                        g.display(&vars)
                    )));
                }
                quotient_gens.push(g);
            }
        }

        let mut ideals: BTreeMap<String, Vec<Polynomial>> = BTreeMap::new();
        for (line_no, offset, name, text) in ideal_lines {
            if name == "m" {
                return Err(Error::Parse {
                    line: line_no,
                    col: 1,
                    msg: "`m` is reserved for the maximal ideal".into(),
                });
            }
            if ideals.contains_key(&name) {
                return Err(Error::Parse {
                    line: line_no,
                    col: 1,
                    msg: format!("ideal `{name}` was already defined"),
                });
            }
            let gens = parse_poly_list(&text, line_no, offset, field, &vars)?;
            for g in &gens {
                if !g.is_homogeneous() {
                    return Err(Error::NotHomogeneousInput(format!(
                        "generator {} of ideal `{name}`",
                        g.display(&vars)
                    )));
                }
            }
            ideals.insert(name, gens);
        }

        Ok(ProblemFile {
            field,
            vars,
            quotient_gens,
            ideals,
        })
    }
}

fn parse_poly_list(
    text: &str,
    line_no: usize,
    col_offset: usize,
    field: FieldSpec,
    vars: &[String],
) -> Result<Vec<Polynomial>> {
    let mut cur = LineCursor::with_offset(text, line_no, col_offset);
    let mut out = Vec::new();
    loop {
        let poly = parse_expr(&mut cur, field, vars)?;
        out.push(poly);
        if !cur.eat(',') {
            break;
        }
    }
    if !cur.at_end() {
        return Err(cur.err("unexpected trailing input after polynomial"));
    }
    Ok(out)
}

fn parse_expr(cur: &mut LineCursor, field: FieldSpec, vars: &[String]) -> Result<Polynomial> {
    let nvars = vars.len();
    let mut acc;
    cur.skip_ws();
    let negate = cur.eat('-');
    if !negate {
        let _ = cur.eat('+');
    }
    acc = parse_term(cur, field, vars)?;
    if negate {
        acc = acc.neg();
    }
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some('+') => {
                cur.bump();
                let t = parse_term(cur, field, vars)?;
                acc = acc.add(&t).map_err(|_| cur.err("ring mismatch"))?;
            }
            Some('-') => {
                cur.bump();
                let t = parse_term(cur, field, vars)?;
                acc = acc.sub(&t).map_err(|_| cur.err("ring mismatch"))?;
            }
            _ => break,
        }
    }
    let _ = nvars;
    Ok(acc)
}

fn parse_term(cur: &mut LineCursor, field: FieldSpec, vars: &[String]) -> Result<Polynomial> {
    let mut acc = parse_factor(cur, field, vars)?;
    loop {
        cur.skip_ws();
        if cur.peek() == Some('*') {
            cur.bump();
            let f = parse_factor(cur, field, vars)?;
            acc = acc.mul(&f).map_err(|e| match e {
                Error::ExponentOverflow => Error::ExponentOverflow,
                _ => cur.err("ring mismatch"),
            })?;
        } else {
            break;
        }
    }
    Ok(acc)
}

fn parse_factor(cur: &mut LineCursor, field: FieldSpec, vars: &[String]) -> Result<Polynomial> {
    let base = parse_atom(cur, field, vars)?;
    cur.skip_ws();
    if cur.peek() == Some('^') {
        cur.bump();
        let e = cur.natural()?;
        let e = u32::try_from(e).map_err(|_| Error::ExponentOverflow)?;
        return base.pow(e);
    }
    Ok(base)
}

fn parse_atom(cur: &mut LineCursor, field: FieldSpec, vars: &[String]) -> Result<Polynomial> {
    cur.skip_ws();
    match cur.peek() {
        Some('(') => {
            cur.bump();
            let inner = parse_expr(cur, field, vars)?;
            cur.expect(')')?;
            Ok(inner)
        }
        Some(c) if c.is_ascii_digit() => {
            let value = cur.natural()?;
            Ok(Polynomial::constant(
                field,
                vars.len(),
                (value % field.p()) as i64,
            ))
        }
        Some(c) if c.is_alphabetic() || c == '_' => {
            let name = cur.ident()?;
            match vars.iter().position(|v| *v == name) {
                Some(i) => Ok(Polynomial::variable(field, vars.len(), i)),
                None => Err(cur.err(format!("unknown variable `{name}`"))),
            }
        }
        _ => Err(cur.err("expected a number, variable, or parenthesized expression")),
    }
}
