//! The monomial-expression input language and its canonical printer.
//!
//! An ideal is a comma-separated list of monomials over the variables
//! `x, y, z, w` (axes 1–4) or `x1..xn` (indexed; any dimension). Exponents
//! use `^`, products use `*` or juxtaposition of distinct variables:
//!
//! ```text
//! x^2, y^3          x1^3*x3          xy^2, z
//! ```
//!
//! The literal `1` denotes the unit monomial. Sums, numeric coefficients
//! other than `1`, and mixing the lettered and indexed naming schemes are
//! rejected with a positioned [`ParseError`]. The literal `0` is the zero
//! polynomial and is rejected as `ZeroIdeal`.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, ParseError, Result};
use crate::ideal::MonomialIdeal;
use crate::index::MultiIndex;

const LETTERS: [char; 4] = ['x', 'y', 'z', 'w'];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum NamingMode {
    Undecided,
    Lettered,
    Indexed,
}

/// One parsed variable occurrence: zero-based axis plus exponent.
struct Factor {
    axis: usize,
    exponent: BigUint,
    pos: usize,
}

struct Parser<'a> {
    text: &'a str,
    chars: Vec<(usize, char)>,
    at: usize,
    mode: NamingMode,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            text,
            chars: text.char_indices().collect(),
            at: 0,
            mode: NamingMode::Undecided,
        }
    }

    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.at).copied()
    }

    fn bump(&mut self) -> Option<(usize, char)> {
        let c = self.peek();
        if c.is_some() {
            self.at += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while let Some((_, c)) = self.peek() {
            if c.is_whitespace() {
                self.at += 1;
            } else {
                break;
            }
        }
    }

    fn end_pos(&self) -> usize {
        self.text.len()
    }

    fn err(&self, pos: usize, msg: impl Into<String>) -> Error {
        Error::Parse(ParseError::new(pos, msg))
    }

    fn read_digits(&mut self) -> (usize, String) {
        let start = self.peek().map(|(p, _)| p).unwrap_or(self.end_pos());
        let mut digits = String::new();
        while let Some((_, c)) = self.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.at += 1;
            } else {
                break;
            }
        }
        (start, digits)
    }

    fn set_mode(&mut self, mode: NamingMode, pos: usize) -> Result<()> {
        match (self.mode, mode) {
            (NamingMode::Undecided, m) => {
                self.mode = m;
                Ok(())
            }
            (a, b) if a == b => Ok(()),
            _ => Err(self.err(
                pos,
                "cannot mix lettered variables (x,y,z,w) with indexed variables (x1..xn)",
            )),
        }
    }

    /// Parses one variable occurrence starting at a letter, with optional
    /// index digits and optional `^exponent`.
    fn parse_variable(&mut self) -> Result<Factor> {
        let (pos, letter) = self.bump().expect("caller checked a letter is next");
        let followed_by_digit = matches!(self.peek(), Some((_, c)) if c.is_ascii_digit());

        let axis = if followed_by_digit {
            if letter != 'x' {
                return Err(self.err(
                    pos,
                    format!("indexed variables must use 'x', found '{letter}'"),
                ));
            }
            self.set_mode(NamingMode::Indexed, pos)?;
            let (dpos, digits) = self.read_digits();
            let idx: usize = digits
                .parse()
                .map_err(|_| self.err(dpos, "variable index out of range"))?;
            if idx == 0 {
                return Err(self.err(dpos, "variable indices start at 1"));
            }
            idx - 1
        } else {
            let axis = LETTERS
                .iter()
                .position(|&l| l == letter)
                .ok_or_else(|| self.err(pos, format!("unknown variable '{letter}'")))?;
            self.set_mode(NamingMode::Lettered, pos)?;
            axis
        };

        let exponent = if matches!(self.peek(), Some((_, '^'))) {
            self.bump();
            self.skip_ws();
            let (dpos, digits) = self.read_digits();
            if digits.is_empty() {
                return Err(self.err(dpos, "expected an integer exponent after '^'"));
            }
            digits
                .parse::<BigUint>()
                .expect("digit string parses as BigUint")
        } else {
            BigUint::from(1u32)
        };

        Ok(Factor {
            axis,
            exponent,
            pos,
        })
    }

    /// Parses one monomial generator up to a `,` or end of input.
    /// Returns the variable factors; an empty list means the monomial `1`.
    fn parse_monomial(&mut self) -> Result<Vec<Factor>> {
        let mut factors: Vec<Factor> = Vec::new();
        // Axes seen since the last explicit '*', to enforce that plain
        // juxtaposition only combines distinct variables.
        let mut run_axes: Vec<usize> = Vec::new();
        let mut saw_anything = false;

        loop {
            self.skip_ws();
            match self.peek() {
                None | Some((_, ',')) => break,
                Some((pos, '*')) => {
                    if !saw_anything {
                        return Err(self.err(pos, "'*' must follow a factor"));
                    }
                    self.bump();
                    run_axes.clear();
                    self.skip_ws();
                    if matches!(self.peek(), None | Some((_, ','))) {
                        return Err(self.err(pos, "dangling '*' at end of monomial"));
                    }
                }
                Some((pos, c)) if c == '+' || c == '-' => {
                    return Err(self.err(
                        pos,
                        format!("'{c}' is not allowed: input must be a list of monomials"),
                    ));
                }
                Some((pos, c)) if c.is_ascii_digit() => {
                    let (_, digits) = self.read_digits();
                    let value: BigUint = digits.parse().expect("digits parse");
                    if value.is_zero() {
                        return Err(Error::ZeroIdeal);
                    }
                    if value != BigUint::from(1u32) {
                        return Err(self.err(
                            pos,
                            format!("numeric coefficient '{digits}' is not a monomial"),
                        ));
                    }
                    if matches!(self.peek(), Some((_, '^'))) {
                        return Err(self.err(pos, "'1' cannot carry an exponent"));
                    }
                    saw_anything = true;
                }
                Some((pos, c)) if c.is_ascii_alphabetic() => {
                    let factor = self.parse_variable()?;
                    if run_axes.contains(&factor.axis) {
                        return Err(self.err(
                            pos,
                            "repeated variable in juxtaposition; separate with '*'",
                        ));
                    }
                    run_axes.push(factor.axis);
                    factors.push(factor);
                    saw_anything = true;
                }
                Some((pos, c)) => {
                    return Err(self.err(pos, format!("unexpected character '{c}'")));
                }
            }
        }

        if !saw_anything {
            let pos = self.peek().map(|(p, _)| p).unwrap_or(self.end_pos());
            return Err(self.err(pos, "empty monomial"));
        }
        Ok(factors)
    }
}

/// Parses a comma-separated list of monomials into a canonical ideal.
///
/// `dim_hint` fixes the ambient dimension; without it the dimension is the
/// highest variable axis used anywhere in the input.
pub fn parse_ideal(text: &str, dim_hint: Option<usize>) -> Result<MonomialIdeal> {
    let mut parser = Parser::new(text);
    let mut monomials: Vec<Vec<Factor>> = Vec::new();

    loop {
        monomials.push(parser.parse_monomial()?);
        parser.skip_ws();
        match parser.bump() {
            None => break,
            Some((_, ',')) => continue,
            Some((pos, c)) => {
                return Err(parser.err(pos, format!("unexpected character '{c}'")));
            }
        }
    }

    let max_axis = monomials
        .iter()
        .flatten()
        .map(|f| f.axis)
        .max()
        .map(|a| a + 1)
        .unwrap_or(0);
    let dim = match dim_hint {
        Some(hint) => {
            if hint < max_axis.max(1) {
                return Err(Error::Parse(ParseError::new(
                    0,
                    format!("dimension hint {hint} is smaller than required {max_axis}"),
                )));
            }
            hint
        }
        None => max_axis.max(1),
    };

    let gens = monomials.into_iter().map(|factors| {
        let mut exps = vec![BigUint::zero(); dim];
        for f in factors {
            exps[f.axis] += f.exponent;
        }
        MultiIndex::new(exps)
    });
    MonomialIdeal::new(dim, gens)
}

/// Canonical printer, the inverse of [`parse_ideal`] on canonical ideals.
/// Uses `x,y,z,w` for dimensions up to four and `x1..xn` beyond.
pub fn render_ideal(ideal: &MonomialIdeal) -> String {
    let dim = ideal.dim();
    let var_name = |axis: usize| -> String {
        if dim <= LETTERS.len() {
            LETTERS[axis].to_string()
        } else {
            format!("x{}", axis + 1)
        }
    };

    let mut out = String::new();
    for (i, g) in ideal.generators().iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        if g.is_zero() {
            out.push('1');
            continue;
        }
        let mut first = true;
        for (axis, e) in g.components().iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            out.push_str(&var_name(axis));
            if *e != BigUint::from(1u32) {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mi(v: &[u64]) -> MultiIndex {
        MultiIndex::from_u64s(v)
    }

    #[test]
    fn basic_two_variable() {
        let ideal = parse_ideal("x^2, y^3", None).unwrap();
        assert_eq!(ideal.dim(), 2);
        assert_eq!(ideal.generators(), &[mi(&[0, 3]), mi(&[2, 0])]);
    }

    #[test]
    fn indexed_variables() {
        let ideal = parse_ideal("x1^3*x3", None).unwrap();
        assert_eq!(ideal.dim(), 3);
        assert_eq!(ideal.generators(), &[mi(&[3, 0, 1])]);
    }

    #[test]
    fn sum_is_rejected_with_position() {
        let err = parse_ideal("x + y", None).unwrap_err();
        match err {
            Error::Parse(p) => {
                assert_eq!(p.pos, 2);
                assert!(p.msg.contains("monomial"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn juxtaposition_and_star() {
        let ideal = parse_ideal("xy^2, z", None).unwrap();
        assert_eq!(ideal.dim(), 3);
        assert_eq!(ideal.generators(), &[mi(&[0, 0, 1]), mi(&[1, 2, 0])]);
        // '*' may repeat a variable; exponents add.
        let sq = parse_ideal("x*x^2", None).unwrap();
        assert_eq!(sq.generators(), &[mi(&[3])]);
        // Juxtaposition may not.
        assert!(matches!(parse_ideal("xx", None), Err(Error::Parse(_))));
    }

    #[test]
    fn unit_and_zero() {
        let unit = parse_ideal("1", Some(2)).unwrap();
        assert!(unit.is_unit());
        assert_eq!(parse_ideal("0", None).unwrap_err(), Error::ZeroIdeal);
        assert!(matches!(parse_ideal("2*x", None), Err(Error::Parse(_))));
    }

    #[test]
    fn naming_schemes_do_not_mix() {
        assert!(matches!(parse_ideal("x1*y", None), Err(Error::Parse(_))));
    }

    #[test]
    fn dimension_hint() {
        let ideal = parse_ideal("x^2", Some(3)).unwrap();
        assert_eq!(ideal.dim(), 3);
        assert_eq!(ideal.generators(), &[mi(&[2, 0, 0])]);
        assert!(parse_ideal("z", Some(2)).is_err());
    }

    #[test]
    fn rejects_junk() {
        assert!(parse_ideal("", None).is_err());
        assert!(parse_ideal("x,,y", None).is_err());
        assert!(parse_ideal("x^", None).is_err());
        assert!(parse_ideal("x*", None).is_err());
        assert!(parse_ideal("(x)", None).is_err());
        assert!(parse_ideal("x5*y", None).is_err());
        assert!(parse_ideal("x0", None).is_err());
    }

    #[test]
    fn render_examples() {
        let ideal = parse_ideal("x^2, y^3", None).unwrap();
        // Canonical order is lex on exponents: (0,3) before (2,0).
        assert_eq!(render_ideal(&ideal), "y^3, x^2");
        let five = MonomialIdeal::new(5, [mi(&[1, 0, 0, 0, 2])]).unwrap();
        assert_eq!(render_ideal(&five), "x1*x5^2");
    }

    proptest! {
        /// parse ∘ render is the identity on canonical ideals.
        #[test]
        fn parse_render_roundtrip(
            dim in 1usize..=5,
            raw in proptest::collection::vec(proptest::collection::vec(0u64..=6, 5), 1..6),
        ) {
            let gens: Vec<MultiIndex> = raw.iter().map(|v| mi(&v[..dim])).collect();
            let ideal = MonomialIdeal::new(dim, gens).unwrap();
            let text = render_ideal(&ideal);
            let reparsed = parse_ideal(&text, Some(dim)).unwrap();
            prop_assert_eq!(reparsed, ideal);
        }
    }
}
