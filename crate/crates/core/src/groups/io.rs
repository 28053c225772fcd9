//! Text format for multiplication tables: a line `order N`, then `N` rows of
//! `N` whitespace-separated indices; row `g`, column `h` holds `g·h` and
//! element 0 is the identity. `#` starts a comment.

use super::table::FiniteGroup;
use super::GroupError;

pub fn parse_table(text: &str) -> Result<FiniteGroup, GroupError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (ln, header) = lines.next().ok_or(GroupError::Parse {
        line: 1,
        msg: "empty input".into(),
    })?;
    let order = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["order", n] => n.parse::<usize>().map_err(|_| GroupError::Parse {
            line: ln,
            msg: format!("bad order `{n}`"),
        })?,
        _ => {
            return Err(GroupError::Parse {
                line: ln,
                msg: "expected `order N`".into(),
            })
        }
    };
    if order > super::MAX_ORDER {
        return Err(GroupError::OrderTooLarge(order));
    }
    let mut rows = Vec::with_capacity(order);
    for _ in 0..order {
        let (ln, line) = lines.next().ok_or(GroupError::Parse {
            line: ln,
            msg: format!("expected {order} table rows, found {}", rows.len()),
        })?;
        let row = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| GroupError::Parse {
                line: ln,
                msg: "non-integer entry".into(),
            })?;
        if row.len() != order {
            return Err(GroupError::Parse {
                line: ln,
                msg: format!("expected {order} entries, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(GroupError::Parse {
            line: ln,
            msg: "trailing content after table".into(),
        });
    }
    FiniteGroup::from_table(&rows)
}

pub fn write_table(g: &FiniteGroup) -> String {
    let mut out = format!("order {}\n", g.order());
    for row in g.table_rows() {
        let line: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{make_family, Family};

    #[test]
    fn round_trip() {
        let g = make_family(&Family::SemidirectC3C2n(1)).unwrap();
        let text = write_table(&g);
        let h = parse_table(&text).unwrap();
        assert_eq!(h.table_rows(), g.table_rows());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_table("# klein\norder 4\n0 1 2 3\n1 0 3 2\n2 3 0\n3 2 1 0\n").unwrap_err();
        assert_eq!(
            err,
            GroupError::Parse {
                line: 5,
                msg: "expected 4 entries, found 3".into()
            }
        );
        assert!(matches!(
            parse_table("ord 3"),
            Err(GroupError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_table("order 2\n0 1\n1 1\n"),
            Err(GroupError::AuditFailed(_))
        ));
    }
}
