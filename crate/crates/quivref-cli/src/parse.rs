//! Text grammar for algebra presentations.
//!
//! Lines, in any order unless noted: `field Q` or `field F<p>`;
//! `vertices <name>...` (required before arrows); `arrow <name> <src> <tgt>`;
//! `relation <term> ((+|-) <term>)*` where a term is an optional integer
//! coefficient followed by a `*`-joined path of arrow names, written with
//! the leftmost arrow applied last; `nilpotency <bound>` (optional).
//! `#` starts a comment. Errors carry a 1-based line and column.

use std::fmt;
use std::sync::Arc;

use quivref_core::algebra::{Algebra, Relation, DEFAULT_NILPOTENCY};
use quivref_core::quiver::{Arrow, Quiver};
use quivref_core::{Error as CoreError, Field};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

/// Syntax errors carry positions; build errors come from the algebra
/// constructor after a syntactically clean read.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PresentationError {
    Syntax(ParseError),
    Build(CoreError),
}

impl fmt::Display for PresentationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentationError::Syntax(e) => write!(f, "{}", e),
            PresentationError::Build(e) => write!(f, "presentation does not build: {}", e),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Presentation {
    pub name: String,
    pub field: Field,
    pub vertex_names: Vec<String>,
    pub relations: Vec<Relation>,
    pub nilpotency: usize,
    pub algebra: Arc<Algebra>,
}

struct Tok<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize(line: &str) -> Vec<Tok<'_>> {
    let body = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    let mut toks = Vec::new();
    let mut chars = body.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        if c.is_whitespace() {
            continue;
        }
        let start = i;
        let mut end = i + c.len_utf8();
        while let Some(&(j, d)) = chars.peek() {
            if d.is_whitespace() {
                break;
            }
            end = j + d.len_utf8();
            chars.next();
        }
        toks.push(Tok {
            text: &body[start..end],
            column: start + 1,
        });
    }
    toks
}

fn err(line: usize, column: usize, message: String) -> PresentationError {
    PresentationError::Syntax(ParseError {
        line,
        column,
        message,
    })
}

fn parse_field(tok: &Tok<'_>, line: usize) -> Result<Field, PresentationError> {
    if tok.text == "Q" {
        return Ok(Field::Rationals);
    }
    if let Some(rest) = tok.text.strip_prefix('F') {
        if let Ok(p) = rest.parse::<u64>() {
            return Field::prime(p)
                .map_err(|_| err(line, tok.column, format!("{} is not prime", p)));
        }
    }
    Err(err(
        line,
        tok.column,
        format!("unknown field '{}'; expected Q or F<p>", tok.text),
    ))
}

struct TermScan<'a> {
    arrows: &'a [Arrow],
}

impl<'a> TermScan<'a> {
    /// Written word `a*b*c` to letters in application order, checking that
    /// adjacent arrows compose.
    fn word(&self, tok: &Tok<'_>, line: usize) -> Result<Vec<usize>, PresentationError> {
        let mut written = Vec::new();
        for name in tok.text.split('*') {
            match self.arrows.iter().position(|a| a.name == name) {
                Some(k) => written.push(k),
                None => {
                    return Err(err(
                        line,
                        tok.column,
                        format!("unknown arrow '{}'", name),
                    ))
                }
            }
        }
        for pair in written.windows(2) {
            let left = &self.arrows[pair[0]];
            let right = &self.arrows[pair[1]];
            if right.target != left.source {
                return Err(err(
                    line,
                    tok.column,
                    format!(
                        "arrows do not compose: {} ends at a different vertex than {} starts",
                        right.name, left.name
                    ),
                ));
            }
        }
        Ok(written.into_iter().rev().collect())
    }
}

fn word_ends(arrows: &[Arrow], letters: &[usize]) -> (usize, usize) {
    let source = arrows[letters[0]].source;
    let target = arrows[letters[letters.len() - 1]].target;
    (source, target)
}

fn parse_relation(
    toks: &[Tok<'_>],
    line: usize,
    arrows: &[Arrow],
) -> Result<Relation, PresentationError> {
    let scan = TermScan { arrows };
    let mut terms: Vec<(i64, Vec<usize>)> = Vec::new();
    let mut sign: i64 = 1;
    let mut coeff: Option<i64> = None;
    let mut expect_term = true;
    for tok in toks {
        match tok.text {
            "+" | "-" if !expect_term => {
                sign = if tok.text == "-" { -1 } else { 1 };
                expect_term = true;
            }
            _ => {
                if !expect_term {
                    return Err(err(
                        line,
                        tok.column,
                        format!("expected + or - before '{}'", tok.text),
                    ));
                }
                if let Ok(n) = tok.text.parse::<i64>() {
                    if coeff.is_some() {
                        return Err(err(
                            line,
                            tok.column,
                            String::from("two coefficients in a row"),
                        ));
                    }
                    coeff = Some(n);
                    continue;
                }
                let letters = scan.word(tok, line)?;
                let c = sign * coeff.take().unwrap_or(1);
                if c == 0 {
                    return Err(err(line, tok.column, String::from("zero coefficient")));
                }
                if let Some((_, first)) = terms.first() {
                    if word_ends(arrows, first) != word_ends(arrows, &letters) {
                        return Err(err(
                            line,
                            tok.column,
                            String::from("terms of one relation must share source and target"),
                        ));
                    }
                }
                terms.push((c, letters));
                sign = 1;
                expect_term = false;
            }
        }
    }
    if expect_term || coeff.is_some() {
        let last = toks.last().expect("nonempty relation body");
        return Err(err(
            line,
            last.column,
            String::from("relation ends without a path"),
        ));
    }
    Ok(Relation { terms })
}

pub fn parse_presentation(name: &str, text: &str) -> Result<Presentation, PresentationError> {
    let mut field: Option<Field> = None;
    let mut vertex_names: Vec<String> = Vec::new();
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut relation_lines: Vec<(usize, Vec<(String, usize)>)> = Vec::new();
    let mut nilpotency: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks = tokenize(raw);
        if toks.is_empty() {
            continue;
        }
        let head = &toks[0];
        match head.text {
            "field" => {
                if toks.len() != 2 {
                    return Err(err(line, head.column, String::from("usage: field Q|F<p>")));
                }
                if field.is_some() {
                    return Err(err(line, head.column, String::from("field given twice")));
                }
                field = Some(parse_field(&toks[1], line)?);
            }
            "vertices" => {
                if toks.len() < 2 {
                    return Err(err(
                        line,
                        head.column,
                        String::from("usage: vertices <name>..."),
                    ));
                }
                if !vertex_names.is_empty() {
                    return Err(err(line, head.column, String::from("vertices given twice")));
                }
                for t in &toks[1..] {
                    if vertex_names.iter().any(|v| v == t.text) {
                        return Err(err(
                            line,
                            t.column,
                            format!("duplicate vertex '{}'", t.text),
                        ));
                    }
                    vertex_names.push(String::from(t.text));
                }
            }
            "arrow" => {
                if toks.len() != 4 {
                    return Err(err(
                        line,
                        head.column,
                        String::from("usage: arrow <name> <source> <target>"),
                    ));
                }
                if vertex_names.is_empty() {
                    return Err(err(
                        line,
                        head.column,
                        String::from("vertices must come before arrows"),
                    ));
                }
                if arrows.iter().any(|a| a.name == toks[1].text) {
                    return Err(err(
                        line,
                        toks[1].column,
                        format!("duplicate arrow '{}'", toks[1].text),
                    ));
                }
                let vertex = |t: &Tok<'_>| -> Result<usize, PresentationError> {
                    vertex_names
                        .iter()
                        .position(|v| v == t.text)
                        .ok_or_else(|| err(line, t.column, format!("unknown vertex '{}'", t.text)))
                };
                arrows.push(Arrow {
                    name: String::from(toks[1].text),
                    source: vertex(&toks[2])?,
                    target: vertex(&toks[3])?,
                });
            }
            "relation" => {
                if toks.len() < 2 {
                    return Err(err(
                        line,
                        head.column,
                        String::from("usage: relation <term> ((+|-) <term>)*"),
                    ));
                }
                let body: Vec<(String, usize)> = toks[1..]
                    .iter()
                    .map(|t| (String::from(t.text), t.column))
                    .collect();
                relation_lines.push((line, body));
            }
            "nilpotency" => {
                if toks.len() != 2 {
                    return Err(err(
                        line,
                        head.column,
                        String::from("usage: nilpotency <bound>"),
                    ));
                }
                match toks[1].text.parse::<usize>() {
                    Ok(n) if n >= 2 => nilpotency = Some(n),
                    _ => {
                        return Err(err(
                            line,
                            toks[1].column,
                            String::from("nilpotency bound must be an integer of at least 2"),
                        ))
                    }
                }
            }
            other => {
                return Err(err(
                    line,
                    head.column,
                    format!("unknown directive '{}'", other),
                ));
            }
        }
    }

    let field = field.ok_or_else(|| err(1, 1, String::from("missing field directive")))?;
    if vertex_names.is_empty() {
        return Err(err(1, 1, String::from("missing vertices directive")));
    }

    let mut relations = Vec::new();
    for (line, body) in &relation_lines {
        let toks: Vec<Tok<'_>> = body
            .iter()
            .map(|(text, column)| Tok {
                text,
                column: *column,
            })
            .collect();
        relations.push(parse_relation(&toks, *line, &arrows)?);
    }

    let bound = nilpotency.unwrap_or(DEFAULT_NILPOTENCY);
    let quiver =
        Quiver::new(vertex_names.len(), arrows.clone()).map_err(PresentationError::Build)?;
    let algebra = Algebra::new(field.clone(), quiver, relations.clone(), bound)
        .map_err(PresentationError::Build)?;
    Ok(Presentation {
        name: String::from(name),
        field,
        vertex_names,
        relations,
        nilpotency: bound,
        algebra: Arc::new(algebra),
    })
}

fn written_word(arrows: &[Arrow], letters: &[usize]) -> String {
    let names: Vec<&str> = letters
        .iter()
        .rev()
        .map(|&k| arrows[k].name.as_str())
        .collect();
    names.join("*")
}

pub fn field_string(f: &Field) -> String {
    match f {
        Field::Rationals => String::from("Q"),
        Field::Prime(p) => format!("F{}", p),
    }
}

/// Canonical text form; parsing it back yields the same algebra.
pub fn print_presentation(p: &Presentation) -> String {
    let arrows = p.algebra.quiver().arrows();
    let mut out = String::new();
    out.push_str(&format!("field {}\n", field_string(&p.field)));
    out.push_str(&format!("vertices {}\n", p.vertex_names.join(" ")));
    for a in arrows {
        out.push_str(&format!(
            "arrow {} {} {}\n",
            a.name, p.vertex_names[a.source], p.vertex_names[a.target]
        ));
    }
    for rel in &p.relations {
        let mut line = String::from("relation");
        for (k, (coeff, letters)) in rel.terms.iter().enumerate() {
            if k == 0 {
                if *coeff < 0 {
                    line.push_str(" -");
                }
            } else {
                line.push_str(if *coeff < 0 { " -" } else { " +" });
            }
            let mag = coeff.unsigned_abs();
            if mag != 1 {
                line.push_str(&format!(" {}", mag));
            }
            line.push(' ');
            line.push_str(&written_word(arrows, letters));
        }
        line.push('\n');
        out.push_str(&line);
    }
    out.push_str(&format!("nilpotency {}\n", p.nilpotency));
    out
}
