//! Line-oriented text format for semiring tables.
//!
//! A description names the structure, lists element labels, picks zero and
//! one, and gives both Cayley tables row by row in label form. `#` starts a
//! comment; blank lines are ignored.

use thiserror::Error;

use crate::semiring::{FiniteSemiring, SemiringError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Invalid(#[from] SemiringError),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

/// Parses one semiring description.
pub fn parse_semiring(text: &str) -> Result<FiniteSemiring, FormatError> {
    // (line number, tokens) for every non-blank line after comment stripping.
    let mut lines = text
        .lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = body.split_whitespace().collect();
            if tokens.is_empty() { None } else { Some((i + 1, tokens)) }
        })
        .collect::<Vec<_>>()
        .into_iter();
    let mut last_line = 0usize;
    let mut next = |expect: &str| -> Result<(usize, Vec<&str>), FormatError> {
        match lines.next() {
            Some((line, tokens)) => {
                last_line = line;
                Ok((line, tokens))
            }
            None => Err(syntax(last_line + 1, format!("expected {expect}, found end of input"))),
        }
    };

    let (line, tokens) = next("`semiring <name>`")?;
    if tokens.len() != 2 || tokens[0] != "semiring" {
        return Err(syntax(line, "expected `semiring <name>`"));
    }
    let name = tokens[1].to_string();

    let (line, tokens) = next("`elements <label>...`")?;
    if tokens.len() < 2 || tokens[0] != "elements" {
        return Err(syntax(line, "expected `elements <label>...` with at least one label"));
    }
    let elements: Vec<String> = tokens[1..].iter().map(|t| t.to_string()).collect();
    let n = elements.len();
    let index_of = |line: usize, label: &str| -> Result<usize, FormatError> {
        elements
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| syntax(line, format!("unknown element label `{label}`")))
    };

    let (line, tokens) = next("`zero <label>`")?;
    if tokens.len() != 2 || tokens[0] != "zero" {
        return Err(syntax(line, "expected `zero <label>`"));
    }
    let zero = index_of(line, tokens[1])?;

    let (line, tokens) = next("`one <label>`")?;
    if tokens.len() != 2 || tokens[0] != "one" {
        return Err(syntax(line, "expected `one <label>`"));
    }
    let one = index_of(line, tokens[1])?;

    let mut read_table = |keyword: &str| -> Result<Vec<usize>, FormatError> {
        let (line, tokens) = next(&format!("`{keyword}`"))?;
        if tokens.len() != 1 || tokens[0] != keyword {
            return Err(syntax(line, format!("expected `{keyword}` on its own line")));
        }
        let mut table = Vec::with_capacity(n * n);
        for row in 0..n {
            let (line, tokens) = next(&format!("row {} of `{keyword}`", row + 1))?;
            if tokens.len() != n {
                return Err(syntax(
                    line,
                    format!("{keyword} row {} has {} entries, expected {n}", row + 1, tokens.len()),
                ));
            }
            for label in tokens {
                table.push(index_of(line, label)?);
            }
        }
        Ok(table)
    };

    let add = read_table("add")?;
    let mul = read_table("mul")?;

    if let Some((line, tokens)) = lines.next() {
        return Err(syntax(line, format!("unexpected trailing input `{}`", tokens.join(" "))));
    }

    Ok(FiniteSemiring::new(name, elements, add, mul, zero, one)?)
}

/// Renders a semiring in the same format `parse_semiring` accepts.
pub fn render_semiring(s: &FiniteSemiring) -> String {
    let n = s.order();
    let mut out = String::new();
    out.push_str(&format!("semiring {}\n", s.name()));
    out.push_str(&format!("elements {}\n", s.elements().join(" ")));
    out.push_str(&format!("zero {}\n", s.label(s.zero())));
    out.push_str(&format!("one {}\n", s.label(s.one())));
    for (keyword, table) in [("add", s.add_table()), ("mul", s.mul_table())] {
        out.push_str(keyword);
        out.push('\n');
        for x in 0..n {
            let row: Vec<&str> = (0..n).map(|y| s.label(table[x * n + y])).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{self, Axiom};
    use proptest::prelude::*;

    const S3_TEXT: &str = "\
# naturals truncated at 2
semiring S3
elements 0 1 T
zero 0
one 1
add
0 1 T
1 T T
T T T
mul
0 0 0
0 1 T
0 T T
";

    #[test]
    fn parses_the_documented_example() {
        let s = parse_semiring(S3_TEXT).unwrap();
        assert_eq!(s, semiring::truncated_nat(2).unwrap());
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let noisy = S3_TEXT.replace("add\n", "\n# tables follow\nadd   # addition\n\n");
        let s = parse_semiring(&noisy).unwrap();
        assert_eq!(s, semiring::truncated_nat(2).unwrap());
    }

    #[test]
    fn missing_section_reports_line() {
        let text = "semiring X\nelements a b\nzero a\n";
        match parse_semiring(text).unwrap_err() {
            FormatError::Syntax { line, msg } => {
                assert_eq!(line, 4);
                assert!(msg.contains("one"), "{msg}");
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn short_row_reports_line() {
        let text = "semiring X\nelements 0 1\nzero 0\none 1\nadd\n0 1\n1\nmul\n0 0\n0 1\n";
        match parse_semiring(text).unwrap_err() {
            FormatError::Syntax { line, msg } => {
                assert_eq!(line, 7);
                assert!(msg.contains("expected 2"), "{msg}");
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_label_reports_line() {
        let text = "semiring X\nelements 0 1\nzero 0\none 1\nadd\n0 1\n1 q\nmul\n0 0\n0 1\n";
        match parse_semiring(text).unwrap_err() {
            FormatError::Syntax { line, msg } => {
                assert_eq!(line, 7);
                assert!(msg.contains('q'), "{msg}");
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn trailing_garbage_is_rejected() {
        let text = format!("{S3_TEXT}stray token\n");
        assert!(matches!(
            parse_semiring(&text).unwrap_err(),
            FormatError::Syntax { line: 14, .. }
        ));
    }

    #[test]
    fn axiom_violations_pass_through() {
        // Non-commutative addition row.
        let text = "semiring X\nelements 0 1\nzero 0\none 1\nadd\n0 1\n0 1\nmul\n0 0\n0 1\n";
        match parse_semiring(text).unwrap_err() {
            FormatError::Invalid(SemiringError::Axioms(vs)) => {
                assert!(vs.iter().any(|v| v.axiom == Axiom::AddCommutativity));
            }
            other => panic!("expected axiom error, got {other:?}"),
        }
    }

    #[test]
    fn round_trip_on_builtins() {
        for s in [
            semiring::boolean(),
            semiring::zmod(2).unwrap(),
            semiring::zmod(4).unwrap(),
            semiring::truncated_nat(2).unwrap(),
            semiring::truncated_nat(3).unwrap(),
            semiring::chain_minplus(4).unwrap(),
        ] {
            let text = render_semiring(&s);
            assert_eq!(parse_semiring(&text).unwrap(), s);
        }
    }

    proptest! {
        // Relabeling with arbitrary tokens must survive a render/parse cycle.
        #[test]
        fn round_trip_survives_relabeling(perm in 0usize..6) {
            let base = semiring::truncated_nat(2).unwrap();
            let labels = [
                ["z", "e", "top"],
                ["a", "b", "c"],
                ["x0", "x1", "x2"],
                ["l", "m", "n"],
                ["p", "q", "r"],
                ["u", "v", "w"],
            ][perm];
            let s = FiniteSemiring::new(
                "relabel",
                labels.iter().map(|l| l.to_string()).collect(),
                base.add_table().to_vec(),
                base.mul_table().to_vec(),
                base.zero(),
                base.one(),
            ).unwrap();
            let text = render_semiring(&s);
            prop_assert_eq!(parse_semiring(&text).unwrap(), s);
        }
    }
}
