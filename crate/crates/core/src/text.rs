//! Plain-text grammars for both object classes, plus the bordered ASCII
//! rendering that draws the boundary labels.
//!
//! Necklaces are one line of comma-separated terms. A term is either a
//! digit string like `136` (legal only when `n <= 9`, where every label is
//! a single digit) or a braced list like `{1,3,6}` (always legal). Parsing
//! infers `k` from the first term and `n` from the term count.
//!
//! Diagrams use a header line `k n rows=<comma list>` followed by one line
//! of `+`/`0` symbols per nonempty row, top row first, columns in drawing
//! order (left to right, column labels descending). Row lengths are weakly
//! decreasing top to bottom, so empty rows form a suffix and are simply
//! omitted; the empty shape renders as the header alone.
//!
//! Both renderers emit canonical bytes: `parse(render(x)) == x`, and equal
//! objects render identically.

use crate::diagram::{LeDiagram, LeReport};
use crate::error::Error;
use crate::forward::boundary_square;
use crate::necklace::{GrassmannNecklace, NecklaceReport};
use crate::shape::{LabeledShape, Square};
use itertools::Itertools;
use std::collections::BTreeMap;
use std::fmt;

/// Parse failure with a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.col, self.message
        )
    }
}

impl std::error::Error for ParseError {}

/// How [`render_necklace`] writes terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermStyle {
    /// Digit strings when `n <= 9`, braces otherwise.
    Compact,
    /// Braced lists regardless of `n`.
    Braces,
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(b)
    }

    /// Skip any whitespace, newlines included.
    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\r' | b'\n')) {
            self.bump();
        }
    }

    /// Skip spaces and tabs only (stays on the current line).
    fn skip_spaces(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t')) {
            self.bump();
        }
    }

    fn here(&self) -> (usize, usize) {
        (self.line, self.col)
    }

    fn fail(&self, message: impl Into<String>) -> ParseError {
        ParseError::at(self.line, self.col, message)
    }

    fn number(&mut self) -> Result<u32, ParseError> {
        let (line, col) = self.here();
        let mut val: u64 = 0;
        let mut any = false;
        while let Some(b @ b'0'..=b'9') = self.peek() {
            any = true;
            val = val * 10 + u64::from(b - b'0');
            if val > u64::from(u32::MAX) {
                return Err(ParseError::at(line, col, "number too large"));
            }
            self.bump();
        }
        if !any {
            return Err(self.fail("expected a number"));
        }
        Ok(val as u32)
    }
}

fn found(b: Option<u8>) -> String {
    match b {
        Some(b'\n') => "end of line".into(),
        Some(c) => format!("`{}`", c as char),
        None => "end of input".into(),
    }
}

/// Parse the comma-separated term grammar described in the module docs.
pub fn parse_necklace(input: &str) -> Result<GrassmannNecklace, ParseError> {
    let mut sc = Scanner::new(input);
    let mut terms: Vec<Vec<u32>> = Vec::new();
    let mut at: Vec<(usize, usize)> = Vec::new();
    let mut first_digit_form: Option<(usize, usize)> = None;
    sc.skip_ws();
    if sc.peek().is_none() {
        return Err(sc.fail("expected a necklace: comma-separated terms"));
    }
    loop {
        sc.skip_ws();
        let start = sc.here();
        let term = match sc.peek() {
            Some(b'{') => braced_term_body(&mut sc)?,
            Some(b'0'..=b'9') => {
                if first_digit_form.is_none() {
                    first_digit_form = Some(start);
                }
                let mut t = Vec::new();
                while let Some(b @ b'0'..=b'9') = sc.peek() {
                    t.push(u32::from(b - b'0'));
                    sc.bump();
                }
                t
            }
            other => {
                return Err(sc.fail(format!(
                    "expected a term (digits or `{{...}}`), found {}",
                    found(other)
                )))
            }
        };
        terms.push(term);
        at.push(start);
        sc.skip_ws();
        match sc.peek() {
            Some(b',') => {
                sc.bump();
            }
            None => break,
            other => {
                return Err(sc.fail(format!(
                    "expected `,` between terms or end of input, found {}",
                    found(other)
                )))
            }
        }
    }

    let n = terms.len();
    if n > 9 {
        if let Some((line, col)) = first_digit_form {
            return Err(ParseError::at(
                line,
                col,
                format!("digit-string terms are ambiguous for n = {n} > 9; use braced terms like {{1,3,12}}"),
            ));
        }
    }
    if terms[0].is_empty() {
        return Err(ParseError::at(
            at[0].0,
            at[0].1,
            "empty terms are not allowed (the rank must satisfy 0 < k < n)",
        ));
    }
    let k = terms[0].len();
    // the term count and first-term size fix the type; reject a bad one
    // before complaining about individual labels
    if k == 0 || k >= n {
        return Err(ParseError::at(
            1,
            1,
            Error::InvalidType {
                k: k as u32,
                n: n as u32,
            }
            .to_string(),
        ));
    }
    for (t, &(line, col)) in terms.iter().zip(&at) {
        if t.len() != k {
            return Err(ParseError::at(
                line,
                col,
                format!(
                    "term has {} labels, expected {} like the first term",
                    t.len(),
                    k
                ),
            ));
        }
        let mut sorted = t.clone();
        sorted.sort_unstable();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(ParseError::at(
                    line,
                    col,
                    format!("duplicate label {}", pair[0]),
                ));
            }
        }
        for &x in t {
            if x < 1 || x as usize > n {
                return Err(ParseError::at(
                    line,
                    col,
                    format!("label {x} outside the ground set 1..={n}"),
                ));
            }
        }
    }
    GrassmannNecklace::new(k as u32, n as u32, terms)
        .map_err(|e| ParseError::at(1, 1, e.to_string()))
}

fn braced_term_body(sc: &mut Scanner) -> Result<Vec<u32>, ParseError> {
    sc.bump(); // the opening `{`
    let mut term = Vec::new();
    sc.skip_ws();
    if sc.peek() == Some(b'}') {
        sc.bump();
        return Ok(term);
    }
    loop {
        sc.skip_ws();
        if !matches!(sc.peek(), Some(b'0'..=b'9')) {
            return Err(sc.fail(format!("expected a label, found {}", found(sc.peek()))));
        }
        term.push(sc.number()?);
        sc.skip_ws();
        match sc.peek() {
            Some(b',') => {
                sc.bump();
            }
            Some(b'}') => {
                sc.bump();
                return Ok(term);
            }
            other => return Err(sc.fail(format!("expected `,` or `}}`, found {}", found(other)))),
        }
    }
}

/// Render a necklace; see [`TermStyle`]. Compact output for `n <= 9`
/// contains one digit per label, so it parses back unambiguously.
pub fn render_necklace(nk: &GrassmannNecklace, style: TermStyle) -> String {
    let braces = matches!(style, TermStyle::Braces) || nk.n() > 9;
    nk.terms()
        .iter()
        .map(|t| {
            if braces {
                braced_term(t)
            } else {
                t.iter().map(|x| x.to_string()).collect()
            }
        })
        .join(",")
}

/// One term in brace form, e.g. `{1,3,6}`.
pub fn braced_term(term: &[u32]) -> String {
    format!("{{{}}}", term.iter().join(","))
}

/// Parse the header-plus-rows grammar described in the module docs.
pub fn parse_diagram(input: &str) -> Result<LeDiagram, ParseError> {
    let mut lines = input.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l));
    let header = lines.next().unwrap_or("");
    let shape = parse_header(header)?;

    let mut line_no = 1usize;
    let mut plus: Vec<Square> = Vec::new();
    for &r in shape.row_labels() {
        let m = shape.row_length(r);
        if m == 0 {
            continue; // empty rows are a suffix and carry no line
        }
        line_no += 1;
        let line = lines.next().ok_or_else(|| {
            ParseError::at(
                line_no,
                1,
                format!("expected {m} symbols (`+` or `0`) for row {r}"),
            )
        })?;
        let chars: Vec<char> = line.chars().collect();
        for (j, &ch) in chars.iter().enumerate() {
            if ch != '+' && ch != '0' {
                return Err(ParseError::at(
                    line_no,
                    j + 1,
                    format!("expected `+` or `0`, found `{ch}`"),
                ));
            }
        }
        if chars.len() > m {
            return Err(ParseError::at(
                line_no,
                m + 1,
                format!("row {r} has more than {m} symbols"),
            ));
        }
        if chars.len() < m {
            return Err(ParseError::at(
                line_no,
                chars.len() + 1,
                format!("row {r} needs {m} symbols, found {}", chars.len()),
            ));
        }
        for (j, c) in shape.row_cols(r).enumerate() {
            if chars[j] == '+' {
                plus.push(Square::new(r, c));
            }
        }
    }
    for rest in lines {
        line_no += 1;
        if !rest.trim().is_empty() {
            return Err(ParseError::at(
                line_no,
                1,
                "unexpected content after the last row",
            ));
        }
    }
    Ok(LeDiagram::new(shape, plus))
}

fn parse_header(line: &str) -> Result<LabeledShape, ParseError> {
    let mut sc = Scanner::new(line);
    sc.skip_spaces();
    if sc.peek().is_none() {
        return Err(sc.fail("expected a header like `3 8 rows=1,3,6`"));
    }
    let k_at = sc.here();
    let k = sc.number()?;
    if !matches!(sc.peek(), Some(b' ' | b'\t')) {
        return Err(sc.fail("expected a space, then the ground-set size"));
    }
    sc.skip_spaces();
    let n = sc.number()?;
    if !matches!(sc.peek(), Some(b' ' | b'\t')) {
        return Err(sc.fail("expected a space, then `rows=`"));
    }
    sc.skip_spaces();
    let kw_at = sc.here();
    for expected in b"rows=" {
        if sc.peek() != Some(*expected) {
            return Err(ParseError::at(kw_at.0, kw_at.1, "expected `rows=`"));
        }
        sc.bump();
    }
    let mut rows: Vec<u32> = Vec::new();
    let mut row_ats: Vec<(usize, usize)> = Vec::new();
    sc.skip_spaces();
    if sc.peek().is_some() {
        loop {
            sc.skip_spaces();
            row_ats.push(sc.here());
            rows.push(sc.number()?);
            sc.skip_spaces();
            match sc.peek() {
                Some(b',') => {
                    sc.bump();
                }
                None => break,
                other => {
                    return Err(sc.fail(format!(
                        "expected `,` or end of line, found {}",
                        found(other)
                    )))
                }
            }
        }
    }
    LabeledShape::from_rows(k, n, &rows).map_err(|e| {
        use crate::error::Error;
        match e {
            Error::InvalidType { .. } => ParseError::at(k_at.0, k_at.1, e.to_string()),
            Error::WrongCardinality { .. } => ParseError::at(kw_at.0, kw_at.1, e.to_string()),
            Error::DuplicateLabel { label } => {
                // point at the second occurrence
                let mut seen = false;
                for (&r, &(line, col)) in rows.iter().zip(&row_ats) {
                    if r == label {
                        if seen {
                            return ParseError::at(line, col, e.to_string());
                        }
                        seen = true;
                    }
                }
                ParseError::at(kw_at.0, kw_at.1, e.to_string())
            }
            Error::LabelOutOfRange { label, .. } => {
                for (&r, &(line, col)) in rows.iter().zip(&row_ats) {
                    if r == label {
                        return ParseError::at(line, col, e.to_string());
                    }
                }
                ParseError::at(kw_at.0, kw_at.1, e.to_string())
            }
            other => ParseError::at(1, 1, other.to_string()),
        }
    })
}

/// Render the canonical text form: header, then one `+`/`0` line per
/// nonempty row.
pub fn render_diagram(d: &LeDiagram) -> String {
    let shape = d.shape();
    let mut out = format!(
        "{} {} rows={}",
        shape.k(),
        shape.n(),
        shape.row_labels().iter().join(",")
    );
    for &r in shape.row_labels() {
        if shape.row_length(r) == 0 {
            continue;
        }
        out.push('\n');
        for c in shape.row_cols(r) {
            out.push(if d.is_plus(Square::new(r, c)) {
                '+'
            } else {
                '0'
            });
        }
    }
    out
}

/// Render a bordered picture of the filling with the boundary walk drawn
/// in: row labels sit right of their row, column labels under the column's
/// bottom edge, labels of height-zero columns to the right of the top
/// border, and each box that anchors a walk start shows that start's label
/// in its corner. Display-only; not parseable.
pub fn render_diagram_ascii(d: &LeDiagram) -> String {
    let shape = d.shape();
    let n = shape.n();
    let w = n.to_string().len(); // width of the widest label
    let iw = 2 + w; // cell interior: symbol, space, label field
    let border = |cells: usize| {
        let mut b = String::new();
        for _ in 0..cells {
            b.push('+');
            for _ in 0..iw {
                b.push('-');
            }
        }
        if cells > 0 {
            b.push('+');
        }
        b
    };

    let mut marks: BTreeMap<Square, u32> = BTreeMap::new();
    for i in 2..=n {
        if let Ok(Some(s)) = boundary_square(shape, i) {
            marks.insert(s, i);
        }
    }

    let drawn_cols: Vec<u32> = shape.col_labels().iter().rev().copied().collect();
    let rows = shape.row_labels();
    let mut lines: Vec<String> = Vec::new();

    // top border, then the height-zero column labels walking off to the
    // right (descending, since labels shrink rightward)
    let first_len = rows.first().map_or(0, |&r| shape.row_length(r));
    let first_row = rows.first().copied().unwrap_or(n + 1);
    let mut top = border(first_len);
    for c in (1..first_row).rev() {
        top.push(' ');
        top.push_str(&format!("{c:>w$}"));
    }
    if !top.is_empty() {
        lines.push(top);
    }

    for (p, &r) in rows.iter().enumerate() {
        let m = shape.row_length(r);
        if m == 0 {
            // the vertical step of an empty row sits at the left edge
            lines.push(r.to_string());
            continue;
        }
        let mut line = String::new();
        for c in shape.row_cols(r) {
            let s = Square::new(r, c);
            let sym = if d.is_plus(s) { '+' } else { '0' };
            let mark = marks.get(&s).map(|i| i.to_string()).unwrap_or_default();
            line.push('|');
            line.push(sym);
            line.push(' ');
            line.push_str(&format!("{mark:>w$}"));
        }
        line.push('|');
        line.push(' ');
        line.push_str(&r.to_string());
        lines.push(line);
        lines.push(border(m));
        // labels of the columns whose bottom edge is this row
        let mut label_line = String::new();
        for (q, &c) in drawn_cols.iter().enumerate() {
            if shape.col_height(c) == p + 1 {
                let offset = q * (iw + 1) + 2;
                while label_line.len() < offset {
                    label_line.push(' ');
                }
                label_line.push_str(&format!("{c:>w$}"));
            }
        }
        while label_line.ends_with(' ') {
            label_line.pop();
        }
        if !label_line.is_empty() {
            lines.push(label_line);
        }
    }
    lines.join("\n")
}

/// One-line-per-finding text form of a filling validation report: `valid`,
/// or `invalid` followed by the findings.
pub fn render_le_report(report: &LeReport) -> String {
    match report {
        LeReport::Valid => "valid".into(),
        LeReport::OutOfShape(squares) => {
            let mut out = String::from("invalid");
            for s in squares {
                out.push_str(&format!("\nout of shape: {s}"));
            }
            out
        }
        LeReport::Violations(violations) => {
            let mut out = String::from("invalid");
            for v in violations {
                out.push_str(&format!("\nviolation: {v}"));
            }
            out
        }
    }
}

/// Text form of a necklace validation report, same shape as
/// [`render_le_report`].
pub fn render_necklace_report(report: &NecklaceReport) -> String {
    if report.is_valid() {
        return "valid".into();
    }
    let mut out = String::from("invalid");
    for f in &report.failures {
        out.push_str(&format!(
            "\naxiom failure at {}: {} -> {}",
            f.index,
            braced_term(&f.term),
            braced_term(&f.next)
        ));
    }
    out
}
