//! The transcribed classification tables. Each entry is written in a terse
//! text form so it can be audited line-by-line against the source: `ij:expr`
//! means `e_i ∘ e_j = expr`, with `expr` a signed sum of `e_k` terms,
//! optionally scaled by a named parameter (`a*e2-b*e3`). Unlisted products
//! are zero.

use super::{CatalogEntry, CatalogLine, Coeff};
use crate::algebra::OpSelector;

struct EntryBuilder {
    entry: CatalogEntry,
}

fn entry(id: &'static str, dim: usize) -> EntryBuilder {
    EntryBuilder {
        entry: CatalogEntry {
            id,
            dim,
            params: Vec::new(),
            table: Vec::new(),
            alpha: Vec::new(),
            printed_product_lines: 0,
            notes: Vec::new(),
        },
    }
}

fn parse_terms(expr: &str) -> Vec<(usize, Coeff)> {
    let mut terms = Vec::new();
    let mut rest = expr.trim();
    let mut sign = 1i64;
    while !rest.is_empty() {
        if let Some(r) = rest.strip_prefix('+') {
            sign = 1;
            rest = r;
            continue;
        }
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
            continue;
        }
        let end = rest
            .find(['+', '-'])
            .unwrap_or(rest.len());
        let term = &rest[..end];
        rest = &rest[end..];
        let (coeff, basis) = match term.split_once('*') {
            Some((c, b)) => (Some(c), b),
            None => (None, term),
        };
        let k: usize = basis
            .strip_prefix('e')
            .and_then(|d| d.parse().ok())
            .unwrap_or_else(|| panic!("bad basis term {term:?}"));
        let coeff = match coeff {
            None => Coeff::Int(sign),
            Some(c) => match c.parse::<i64>() {
                Ok(n) => Coeff::Int(sign * n),
                Err(_) => {
                    let name: &'static str = match c {
                        "a" => "a",
                        "b" => "b",
                        "d" => "d",
                        other => panic!("unknown parameter {other:?}"),
                    };
                    Coeff::Param(name, sign)
                }
            },
        };
        terms.push((k, coeff));
        sign = 1;
    }
    terms
}

impl EntryBuilder {
    fn lines(mut self, op: OpSelector, spec: &str) -> Self {
        for token in spec.split_whitespace() {
            let (ij, expr) = token.split_once(':').expect("ij:expr token");
            let digits: Vec<usize> = ij
                .chars()
                .map(|c| c.to_digit(10).expect("digit index") as usize)
                .collect();
            assert_eq!(digits.len(), 2, "two indices in {token:?}");
            self.entry.table.push(CatalogLine {
                op,
                i: digits[0],
                j: digits[1],
                terms: parse_terms(expr),
            });
        }
        self
    }

    fn left(self, spec: &str) -> Self {
        self.lines(OpSelector::Left, spec)
    }

    fn right(self, spec: &str) -> Self {
        self.lines(OpSelector::Right, spec)
    }

    fn middle(self, spec: &str) -> Self {
        self.lines(OpSelector::Middle, spec)
    }

    fn alpha(mut self, spec: &str) -> Self {
        for token in spec.split_whitespace() {
            let (i, expr) = token.split_once(':').expect("i:expr token");
            let i: usize = i.parse().expect("basis index");
            self.entry.alpha.push((i, parse_terms(expr)));
        }
        self
    }

    fn param(mut self, name: &'static str) -> Self {
        self.entry.params.push(name);
        self
    }

    fn printed(mut self, lines: usize) -> Self {
        self.entry.printed_product_lines = lines;
        self
    }

    fn note(mut self, text: &'static str) -> Self {
        self.entry.notes.push(text);
        self
    }

    fn done(self) -> CatalogEntry {
        assert!(
            self.entry.printed_product_lines > 0,
            "printed line count missing for {}",
            self.entry.id
        );
        self.entry
    }
}

pub(super) fn entries() -> Vec<CatalogEntry> {
    vec![
        entry("TH2.1", 2)
            .left("12:e1 21:e1 22:e1")
            .right("12:e1 21:e1 22:e1")
            .middle("12:e1 21:e1 22:e1")
            .alpha("2:e1")
            .printed(9)
            .done(),
        entry("TH2.2", 2)
            .left("12:e1 21:e1 22:e1")
            .right("12:e1 21:e1 22:e1")
            .middle("22:e1")
            .alpha("2:e1")
            .printed(7)
            .done(),
        entry("TH2.3", 2)
            .left("12:e1 21:e1 22:e1")
            .right("12:e1 21:e1")
            .middle("22:e1")
            .alpha("2:e1")
            .printed(6)
            .done(),
        entry("TH2.4", 2)
            .left("22:e1")
            .right("22:e1")
            .middle("22:e1")
            .alpha("1:e1 2:e1+e2")
            .printed(3)
            .done(),
        entry("TH2.5", 2)
            .left("21:e1 22:e1+e2")
            .right("21:e1 22:e1+e2")
            .middle("21:e1 22:e1+e2")
            .alpha("1:e1 2:e1+e2")
            .printed(6)
            .done(),
        entry("TH2.6", 2)
            .left("12:e1 22:e1+e2")
            .right("12:e1 22:e1+e2")
            .middle("12:e1 22:e1+e2")
            .alpha("1:e1 2:e1+e2")
            .printed(6)
            .done(),
        entry("TH2.7", 2)
            .left("12:e1 22:e2")
            .right("21:e1 22:e2")
            .middle("11:e1 12:e1 21:e1 22:e2")
            .alpha("1:e1 2:e2")
            .printed(8)
            .done(),
        entry("TH2.8", 2)
            .left("12:e1 22:e2")
            .right("21:e1 22:e2")
            .middle("12:e1 21:e1 22:e2")
            .alpha("1:e1 2:e2")
            .printed(7)
            .done(),
        entry("TH2.9", 2)
            .left("11:-e1 12:e2 21:e2")
            .right("11:-e1 12:e2 21:e2")
            .middle("11:-e1 12:e1 22:e2")
            .alpha("1:e1 2:-e2")
            .printed(9)
            .done(),
        entry("TH2.10", 2)
            .left("11:-e1 12:e2")
            .right("11:-e1 12:e2")
            .middle("11:-e1 12:e2 21:e2")
            .alpha("1:e1 2:-e2")
            .printed(7)
            .done(),
        entry("TH2.11", 2)
            .left("11:e1 22:e2")
            .right("11:e1 22:e2")
            .middle("11:e1 22:e2")
            .alpha("2:e2")
            .printed(6)
            .done(),
        entry("TH2.12", 2)
            .left("22:e2")
            .right("22:e2")
            .middle("11:e1 22:e2")
            .alpha("1:e1")
            .printed(4)
            .done(),
        entry("TH2.13", 2)
            .left("12:e1 22:e2")
            .right("21:e1 22:e2")
            .middle("11:e1 12:e1 21:e1 22:e1+e2")
            .alpha("1:e1 2:e2")
            .printed(8)
            .note("printed table repeats the line (2,2):e2 under the left product; the second occurrence is read as the right product's (2,2):e2")
            .done(),
        entry("TH3.1", 3)
            .left("22:e2+e3 23:e2+e3 32:e2+e3")
            .right("22:e2+e3 32:e2+e3 33:e2+e3")
            .middle("22:e2+e3 23:e2+e3 32:e2+e3 33:e2+e3")
            .alpha("1:e1")
            .printed(10)
            .done(),
        entry("TH3.2", 3)
            .left("22:e2+e3 32:e2+e3 33:e2+e3")
            .right("22:e2+e3 23:e2+e3 33:e2+e3")
            .middle("23:e2+e3 32:e2+e3 33:e2+e3")
            .alpha("1:e1")
            .printed(9)
            .done(),
        entry("TH3.3", 3)
            .left("11:a*e2 33:e3")
            .right("11:e2 33:e2")
            .middle("11:e2 33:e2")
            .alpha("1:e1 2:e2")
            .param("a")
            .printed(6)
            .done(),
        entry("TH3.4", 3)
            .left("11:e3 22:e2")
            .right("11:e3 22:e2")
            .middle("11:e3 22:e2")
            .alpha("1:e1 3:e3")
            .printed(6)
            .done(),
        entry("TH3.5", 3)
            .left("11:a*e1 22:e2 32:e3")
            .right("11:e1 22:e2 32:e3")
            .middle("11:e1 22:e2 32:e3")
            .alpha("2:e2 3:e3")
            .param("a")
            .printed(9)
            .note("printed table lists (3,2):e3 a second time, written with the right-product symbol, inside the middle-product column; it is read as the middle product's (3,2):e3")
            .done(),
        entry("TH3.6", 3)
            .left("11:e1+e3 13:e1+e3 31:e1+e3")
            .right("11:e1+e3 13:e1+e3 31:e1+e3")
            .middle("11:e1+e3 13:e1+e3 31:e1+e3")
            .alpha("2:e2")
            .printed(9)
            .done(),
        entry("TH3.7", 3)
            .left("11:e1+e2 12:e1+e2 22:e1+e2")
            .right("11:e1+e2 12:e1+e2 21:e1+e2 22:e1+e2")
            .middle("21:e1+e2 22:e1+e2")
            .alpha("3:e3")
            .printed(9)
            .done(),
        entry("TH3.8", 3)
            .left("12:e1+e2 21:e1+e2 22:e1+e2")
            .right("21:e1+e2 22:e1+e2")
            .middle("11:e1+e2 12:e1+e2 22:e1+e2")
            .alpha("3:e3")
            .printed(8)
            .done(),
        entry("TH3.9", 3)
            .left("22:a*e2-b*e3")
            .right("22:e2+d*e3")
            .middle("22:b*e2+e3")
            .alpha("1:e1 2:e1+e2 3:e2+e3")
            .param("a")
            .param("b")
            .param("d")
            .printed(3)
            .done(),
        entry("TH3.10", 3)
            .left("12:e1 21:e1 22:e1")
            .right("21:e1 22:e1 23:e1")
            .middle("22:e1 23:e1 32:e1")
            .alpha("2:e1 3:e3")
            .printed(9)
            .done(),
        entry("TH3.11", 3)
            .left("21:e1 22:e1 32:e1")
            .right("12:e1 21:e1 32:e1")
            .middle("22:e1 32:e1")
            .alpha("2:e1 3:e3")
            .printed(8)
            .done(),
        entry("TH3.12", 3)
            .left("21:e1+e3 22:e1+e3 33:e1+e3 12:e1+e3")
            .right("21:e1+e3 23:e1+e3")
            .middle("22:e1+e3 23:e1+e3 33:e1+e3")
            .alpha("2:e1")
            .printed(9)
            .done(),
        entry("TH3.13", 3)
            .left("32:e1+e3 33:e1+e3")
            .right("12:e1+e3 23:e1+e3 32:e1+e3 33:e1+e3")
            .middle("22:e1+e3 32:e1+e3 33:e1+e3")
            .alpha("2:e1")
            .printed(9)
            .done(),
        entry("TH3.14", 3)
            .left("23:e1+e3 32:e1+e3 33:e1+e3")
            .right("22:e1+e3 32:e1+e3 33:e1+e3")
            .middle("32:e1+e3 33:e1+e3")
            .alpha("2:e1")
            .printed(8)
            .done(),
        entry("TH3.15", 3)
            .left("12:e1+e3 32:e1+e3 33:e1+e3")
            .right("23:e1+e3 32:e1+e3 33:e1+e3")
            .middle("21:e3 23:e3 33:e3")
            .alpha("2:e1")
            .printed(9)
            .done(),
        entry("TH3.16", 3)
            .left("21:e3 22:e3 33:e1+e3")
            .right("12:e1 32:e1+e3 33:e1")
            .middle("32:e3 33:e3")
            .alpha("2:e1")
            .printed(8)
            .done(),
        entry("TH3.17", 3)
            .left("12:e1+e3 21:e1+e3")
            .right("12:e1 33:e1")
            .middle("12:e3 21:e3 32:e1 33:e3")
            .alpha("2:e1")
            .printed(8)
            .done(),
        entry("TH3.18", 3)
            .left("23:e1+e3 32:e1+e3 33:e1+e3")
            .right("21:e3 22:e1+e3 33:e1+e3")
            .middle("12:e1+e3 23:e1 32:e1+e3")
            .alpha("2:e1")
            .printed(9)
            .done(),
        entry("TH3.19", 3)
            .left("23:e2 32:e2 33:e3")
            .right("22:e2+e3 33:e2+e3")
            .middle("22:e2+e3 23:e3 32:e3 33:e3")
            .alpha("1:e1")
            .printed(9)
            .done(),
        entry("TH3.20", 3)
            .left("13:e1 23:e1 33:e1")
            .right("31:e1 32:e1 33:e1")
            .middle("13:e1 23:e1 33:e1")
            .alpha("2:e1 3:e2")
            .printed(9)
            .done(),
        entry("TH3.21", 3)
            .left("23:e1 32:e1 33:e1")
            .right("31:e1 33:e1")
            .middle("13:e1 23:e1 31:e1 32:e1")
            .alpha("2:e1 3:e2")
            .printed(9)
            .done(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn term_parser_handles_all_forms() {
        assert_eq!(parse_terms("e1"), vec![(1, Coeff::Int(1))]);
        assert_eq!(parse_terms("-e1"), vec![(1, Coeff::Int(-1))]);
        assert_eq!(
            parse_terms("e2+e3"),
            vec![(2, Coeff::Int(1)), (3, Coeff::Int(1))]
        );
        assert_eq!(
            parse_terms("a*e2-b*e3"),
            vec![(2, Coeff::Param("a", 1)), (3, Coeff::Param("b", -1))]
        );
        assert_eq!(
            parse_terms("e2+d*e3"),
            vec![(2, Coeff::Int(1)), (3, Coeff::Param("d", 1))]
        );
        assert_eq!(
            parse_terms("b*e2+e3"),
            vec![(2, Coeff::Param("b", 1)), (3, Coeff::Int(1))]
        );
        assert_eq!(parse_terms("2*e1"), vec![(1, Coeff::Int(2))]);
    }

    #[test]
    fn no_duplicate_lines_within_an_entry() {
        for e in entries() {
            let mut seen = Vec::new();
            for l in &e.table {
                let key = (l.op, l.i, l.j);
                assert!(!seen.contains(&key), "{}: duplicate {:?}", e.id, key);
                seen.push(key);
            }
        }
    }
}
