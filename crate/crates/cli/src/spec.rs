//! Parsers for the small languages used on the command line and in the
//! catalog: generator lists, subgroup specs, group specs and G-set specs.

use pullbacklab::perm::parse_cycles;
use pullbacklab::ParseError;

/// Splits a generator list such as `[(1,2), (1,2,3)(4,5)]` into its
/// generators. The brackets may be `[]`, `<>`, `⟨⟩` or absent; an empty list
/// is allowed. Each generator is checked with the cycle parser and returned
/// as written, trimmed.
pub fn parse_generator_list(text: &str) -> Result<Vec<String>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut start = 0;
    let mut end = chars.len();
    while start < end && chars[start].is_whitespace() {
        start += 1;
    }
    while end > start && chars[end - 1].is_whitespace() {
        end -= 1;
    }
    if start < end {
        let close = match chars[start] {
            '[' => Some(']'),
            '<' => Some('>'),
            '⟨' => Some('⟩'),
            _ => None,
        };
        if let Some(close) = close {
            if end - start < 2 || chars[end - 1] != close {
                return Err(ParseError {
                    column: end + 1,
                    message: format!("expected closing {close:?}"),
                });
            }
            start += 1;
            end -= 1;
        }
    }
    let mut gens = Vec::new();
    let mut depth = 0usize;
    let mut piece_start = start;
    for i in start..=end {
        let c = chars.get(i).copied().filter(|_| i < end);
        match c {
            Some('(') => {
                if depth > 0 {
                    return Err(ParseError {
                        column: i + 1,
                        message: "nested '('".into(),
                    });
                }
                depth += 1;
            }
            Some(')') => {
                if depth == 0 {
                    return Err(ParseError {
                        column: i + 1,
                        message: "unmatched ')'".into(),
                    });
                }
                depth -= 1;
            }
            Some(',') if depth > 0 => {}
            Some(',') | None => {
                let piece: String = chars[piece_start..i].iter().collect();
                let trimmed = piece.trim();
                if trimmed.is_empty() {
                    if c.is_some() || !gens.is_empty() {
                        return Err(ParseError {
                            column: i + 1,
                            message: "empty generator".into(),
                        });
                    }
                } else {
                    let lead = piece.len() - piece.trim_start().len();
                    let offset = piece_start + piece[..lead].chars().count();
                    parse_cycles(trimmed).map_err(|e| ParseError {
                        column: offset + e.column,
                        message: e.message,
                    })?;
                    gens.push(trimmed.to_string());
                }
                piece_start = i + 1;
            }
            _ => {}
        }
    }
    Ok(gens)
}

/// A subgroup of a group named on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupSpec {
    /// `G` or `whole`.
    Whole,
    /// `e`, `1` or `trivial`.
    Trivial,
    /// A subgroup named in the catalog entry of the group.
    Named(String),
    /// Generators in cycle notation.
    Generators(Vec<String>),
}

fn is_identifier(text: &str) -> bool {
    let mut chars = text.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '-')
}

pub fn parse_subgroup_spec(text: &str) -> Result<SubgroupSpec, ParseError> {
    let t = text.trim();
    match t {
        "G" | "whole" => return Ok(SubgroupSpec::Whole),
        "e" | "1" | "trivial" => return Ok(SubgroupSpec::Trivial),
        _ => {}
    }
    if is_identifier(t) {
        return Ok(SubgroupSpec::Named(t.to_string()));
    }
    let gens = parse_generator_list(text)?;
    if gens.is_empty() {
        Ok(SubgroupSpec::Trivial)
    } else {
        Ok(SubgroupSpec::Generators(gens))
    }
}

/// A group: a catalog name, or `N:[gens]` for the group of degree `N`
/// generated by the list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Named(String),
    Inline { degree: usize, generators: Vec<String> },
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let t = text.trim();
    if is_identifier(t) {
        return Ok(GroupSpec::Named(t.to_string()));
    }
    let Some((deg, rest)) = t.split_once(':') else {
        return Err(ParseError {
            column: 1,
            message: "expected a catalog name or DEGREE:[generators]".into(),
        });
    };
    let degree: usize = deg.trim().parse().map_err(|_| ParseError {
        column: 1,
        message: format!("invalid degree {:?}", deg.trim()),
    })?;
    if degree == 0 {
        return Err(ParseError {
            column: 1,
            message: "degree must be positive".into(),
        });
    }
    let offset = deg.chars().count() + 1;
    let generators = parse_generator_list(rest).map_err(|e| ParseError {
        column: offset + e.column,
        message: e.message,
    })?;
    Ok(GroupSpec::Inline { degree, generators })
}

/// A finite G-set up to isomorphism.
///
/// Either a sum of transitive pieces, `2*<(1,2)> + e + G`, or explicit
/// multiplicities over the class basis, `mult:1,0,2,0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GSetSpec {
    Terms(Vec<(u64, SubgroupSpec)>),
    Multiplicities(Vec<u64>),
}

pub fn parse_gset_spec(text: &str) -> Result<GSetSpec, ParseError> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix("mult:") {
        let mut out = Vec::new();
        if rest.trim().is_empty() {
            return Err(ParseError {
                column: 6,
                message: "expected multiplicities".into(),
            });
        }
        let mut col = 6;
        for part in rest.split(',') {
            let v = part.trim().parse::<u64>().map_err(|_| ParseError {
                column: col,
                message: format!("invalid multiplicity {:?}", part.trim()),
            })?;
            out.push(v);
            col += part.chars().count() + 1;
        }
        return Ok(GSetSpec::Multiplicities(out));
    }
    let chars: Vec<char> = text.chars().collect();
    let mut terms = Vec::new();
    let mut depth = 0usize;
    let mut piece_start = 0;
    for i in 0..=chars.len() {
        let c = chars.get(i).copied();
        match c {
            Some('(') | Some('[') | Some('<') | Some('⟨') => depth += 1,
            Some(')') | Some(']') | Some('>') | Some('⟩') => depth = depth.saturating_sub(1),
            Some('+') if depth == 0 => {}
            None => {}
            _ => continue,
        }
        if c.is_some() && c != Some('+') {
            continue;
        }
        if c == Some('+') && depth > 0 {
            continue;
        }
        let piece: String = chars[piece_start..i].iter().collect();
        let column = piece_start + 1;
        if piece.trim().is_empty() {
            return Err(ParseError {
                column,
                message: "empty term".into(),
            });
        }
        let (coef, body, body_col) = match piece.split_once('*') {
            Some((k, rest)) if k.trim().chars().all(|c| c.is_ascii_digit()) && !k.trim().is_empty() => {
                let k: u64 = k.trim().parse().map_err(|_| ParseError {
                    column,
                    message: "coefficient too large".into(),
                })?;
                (k, rest.to_string(), column + piece.find('*').unwrap_or(0) + 1)
            }
            _ => (1, piece.clone(), column),
        };
        let spec = parse_subgroup_spec(&body).map_err(|e| ParseError {
            column: body_col + e.column - 1,
            message: e.message,
        })?;
        terms.push((coef, spec));
        piece_start = i + 1;
    }
    Ok(GSetSpec::Terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_lists() {
        assert_eq!(parse_generator_list("[(1,2), (1,2,3)]").unwrap(), vec!["(1,2)", "(1,2,3)"]);
        assert_eq!(parse_generator_list("⟨(1,2)(3,4)⟩").unwrap(), vec!["(1,2)(3,4)"]);
        assert_eq!(parse_generator_list("(1,2),(2,3)").unwrap(), vec!["(1,2)", "(2,3)"]);
        assert!(parse_generator_list("[]").unwrap().is_empty());
        assert!(parse_generator_list("<").is_err());
        assert!(parse_generator_list("[(1,2),]").is_err());
        let e = parse_generator_list("[(1,2), (1,x)]").unwrap_err();
        assert_eq!(e.column, 12);
        assert!(parse_generator_list("(1,2").is_err());
        assert!(parse_generator_list("((1))").is_err());
    }

    #[test]
    fn subgroup_specs() {
        assert_eq!(parse_subgroup_spec("G").unwrap(), SubgroupSpec::Whole);
        assert_eq!(parse_subgroup_spec(" e ").unwrap(), SubgroupSpec::Trivial);
        assert_eq!(parse_subgroup_spec("<>").unwrap(), SubgroupSpec::Trivial);
        assert_eq!(parse_subgroup_spec("Klein").unwrap(), SubgroupSpec::Named("Klein".into()));
        assert_eq!(
            parse_subgroup_spec("⟨(1,2)⟩").unwrap(),
            SubgroupSpec::Generators(vec!["(1,2)".into()])
        );
    }

    #[test]
    fn group_specs() {
        assert_eq!(parse_group_spec("S3").unwrap(), GroupSpec::Named("S3".into()));
        assert_eq!(
            parse_group_spec("3:[(1,2),(1,2,3)]").unwrap(),
            GroupSpec::Inline {
                degree: 3,
                generators: vec!["(1,2)".into(), "(1,2,3)".into()]
            }
        );
        assert!(parse_group_spec("0:[]").is_err());
        assert!(parse_group_spec("x:[]").is_err());
        assert!(parse_group_spec("(1,2)").is_err());
    }

    #[test]
    fn gset_specs() {
        assert_eq!(
            parse_gset_spec("2*<(1,2)> + e").unwrap(),
            GSetSpec::Terms(vec![
                (2, SubgroupSpec::Generators(vec!["(1,2)".into()])),
                (1, SubgroupSpec::Trivial)
            ])
        );
        assert_eq!(parse_gset_spec("mult:1, 0,2").unwrap(), GSetSpec::Multiplicities(vec![1, 0, 2]));
        assert!(parse_gset_spec("mult:1,x").is_err());
        assert!(parse_gset_spec("e + ").is_err());
        assert!(parse_gset_spec("").is_err());
        assert_eq!(
            parse_gset_spec("[(1,2),(2,3)]").unwrap(),
            GSetSpec::Terms(vec![(1, SubgroupSpec::Generators(vec!["(1,2)".into(), "(2,3)".into()]))])
        );
    }
}
