//! Recursive-descent parser for the ring expression grammar and for element
//! literals.
//!
//! Ring grammar (whitespace-insensitive, `x` left-associative):
//!
//! ```text
//! expr   := atom ( "x" atom )*
//! atom   := "Z(" int ")"
//!         | "M(" int "," expr ")"
//!         | "T(" int "," expr ")"
//!         | "corner(" expr "," element ")"
//!         | "(" expr ")"
//! ```
//!
//! Element literals are plain integers for modular rings (negative values
//! reduce into range), `[[..],[..]]` rows for matrix shapes, and `(u,v)`
//! pairs for products; corner elements use the base ring's syntax.

use std::fmt;

use pns_lab::{Element, FiniteRing, Literal, RingDescriptor, RingError};

/// Parse failure with the byte offset it happened at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Ring expression AST; every node remembers its source span.
#[derive(Clone, Debug)]
pub struct RingExpr {
    pub node: RingNode,
    pub span: (usize, usize),
}

#[derive(Clone, Debug)]
pub enum RingNode {
    Zn(u64),
    Matrix(usize, Box<RingExpr>),
    UpperTriangular(usize, Box<RingExpr>),
    Product(Box<RingExpr>, Box<RingExpr>),
    Corner(Box<RingExpr>, LiteralExpr),
}

/// Element literal AST with its span.
#[derive(Clone, Debug)]
pub struct LiteralExpr {
    pub node: LiteralNode,
    pub span: (usize, usize),
}

#[derive(Clone, Debug)]
pub enum LiteralNode {
    Int(i64),
    Rows(Vec<Vec<LiteralExpr>>),
    Pair(Box<LiteralExpr>, Box<LiteralExpr>),
}

impl RingExpr {
    /// Lowers the AST to a descriptor, resolving integer literals against
    /// each ring shape.
    pub fn to_descriptor(&self) -> Result<RingDescriptor, ParseError> {
        match &self.node {
            RingNode::Zn(n) => Ok(RingDescriptor::Zn(*n)),
            RingNode::Matrix(k, base) => Ok(RingDescriptor::Matrix(
                *k,
                Box::new(base.to_descriptor()?),
            )),
            RingNode::UpperTriangular(k, base) => Ok(RingDescriptor::UpperTriangular(
                *k,
                Box::new(base.to_descriptor()?),
            )),
            RingNode::Product(l, r) => Ok(RingDescriptor::Product(
                Box::new(l.to_descriptor()?),
                Box::new(r.to_descriptor()?),
            )),
            RingNode::Corner(base, literal) => {
                let base_descriptor = base.to_descriptor()?;
                let lowered = lower_literal(literal, &base_descriptor)?;
                Ok(RingDescriptor::Corner(Box::new(base_descriptor), lowered))
            }
        }
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_descriptor() {
            Ok(d) => write!(f, "{d}"),
            Err(_) => write!(f, "<unresolved ring expression>"),
        }
    }
}

/// Resolves a literal AST against a ring shape. Integers reduce modulo the
/// target modulus (so negative values are accepted); shapes must match the
/// descriptor exactly.
fn lower_literal(
    literal: &LiteralExpr,
    shape: &RingDescriptor,
) -> Result<Literal, ParseError> {
    let err = |message: String| ParseError {
        position: literal.span.0,
        message,
    };
    match (&literal.node, shape) {
        (LiteralNode::Int(v), RingDescriptor::Zn(n)) => {
            Ok(Literal::Residue(v.rem_euclid(*n as i64) as u64))
        }
        (LiteralNode::Rows(rows), RingDescriptor::Matrix(k, base))
        | (LiteralNode::Rows(rows), RingDescriptor::UpperTriangular(k, base)) => {
            if rows.len() != *k || rows.iter().any(|r| r.len() != *k) {
                return Err(err(format!("expected a {k}x{k} matrix literal")));
            }
            let mut out = Vec::with_capacity(*k);
            for row in rows {
                let mut cells = Vec::with_capacity(*k);
                for cell in row {
                    cells.push(lower_literal(cell, base)?);
                }
                out.push(cells);
            }
            Ok(Literal::Matrix(out))
        }
        (LiteralNode::Pair(l, r), RingDescriptor::Product(ls, rs)) => Ok(Literal::Pair(
            Box::new(lower_literal(l, ls)?),
            Box::new(lower_literal(r, rs)?),
        )),
        (_, RingDescriptor::Corner(base, _)) => lower_literal(literal, base),
        _ => Err(err(format!("literal does not match the shape of {shape}"))),
    }
}

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            text: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<(), ParseError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", byte as char)))
        }
    }

    fn eat_keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(word.as_bytes()) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .expect("digits are ascii")
            .parse()
            .map_err(|_| self.error("integer out of range"))
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.text.len()
    }
}

fn ring_atom(c: &mut Cursor<'_>) -> Result<RingExpr, ParseError> {
    c.skip_ws();
    let start = c.pos;
    if c.eat_keyword("corner") {
        c.expect(b'(')?;
        let base = ring_expr(c)?;
        c.expect(b',')?;
        let literal = literal_expr(c)?;
        c.expect(b')')?;
        return Ok(RingExpr {
            node: RingNode::Corner(Box::new(base), literal),
            span: (start, c.pos),
        });
    }
    if c.eat_keyword("Z") {
        c.expect(b'(')?;
        let n = c.integer()?;
        c.expect(b')')?;
        if n < 0 {
            return Err(ParseError {
                position: start,
                message: "modulus must be nonnegative".to_string(),
            });
        }
        return Ok(RingExpr {
            node: RingNode::Zn(n as u64),
            span: (start, c.pos),
        });
    }
    for (word, upper) in [("M", false), ("T", true)] {
        if c.eat_keyword(word) {
            c.expect(b'(')?;
            let k = c.integer()?;
            c.expect(b',')?;
            let base = ring_expr(c)?;
            c.expect(b')')?;
            if k < 1 {
                return Err(ParseError {
                    position: start,
                    message: "matrix dimension must be at least 1".to_string(),
                });
            }
            let node = if upper {
                RingNode::UpperTriangular(k as usize, Box::new(base))
            } else {
                RingNode::Matrix(k as usize, Box::new(base))
            };
            return Ok(RingExpr {
                node,
                span: (start, c.pos),
            });
        }
    }
    if c.peek() == Some(b'(') {
        c.expect(b'(')?;
        let inner = ring_expr(c)?;
        c.expect(b')')?;
        return Ok(RingExpr {
            node: inner.node,
            span: (start, c.pos),
        });
    }
    Err(c.error("expected a ring expression (Z, M, T, corner or a parenthesized group)"))
}

fn ring_expr(c: &mut Cursor<'_>) -> Result<RingExpr, ParseError> {
    let start = {
        c.skip_ws();
        c.pos
    };
    let mut lhs = ring_atom(c)?;
    // `x` separates direct factors and associates to the left.
    while c.peek() == Some(b'x') {
        c.pos += 1;
        let rhs = ring_atom(c)?;
        lhs = RingExpr {
            node: RingNode::Product(Box::new(lhs), Box::new(rhs)),
            span: (start, c.pos),
        };
    }
    Ok(lhs)
}

fn literal_expr(c: &mut Cursor<'_>) -> Result<LiteralExpr, ParseError> {
    c.skip_ws();
    let start = c.pos;
    match c.peek() {
        Some(b'[') => {
            c.expect(b'[')?;
            let mut rows = Vec::new();
            loop {
                c.expect(b'[')?;
                let mut row = vec![literal_expr(c)?];
                while c.peek() == Some(b',') {
                    c.pos += 1;
                    row.push(literal_expr(c)?);
                }
                c.expect(b']')?;
                rows.push(row);
                if c.peek() == Some(b',') {
                    c.pos += 1;
                    continue;
                }
                break;
            }
            c.expect(b']')?;
            Ok(LiteralExpr {
                node: LiteralNode::Rows(rows),
                span: (start, c.pos),
            })
        }
        Some(b'(') => {
            c.expect(b'(')?;
            let left = literal_expr(c)?;
            c.expect(b',')?;
            let right = literal_expr(c)?;
            c.expect(b')')?;
            Ok(LiteralExpr {
                node: LiteralNode::Pair(Box::new(left), Box::new(right)),
                span: (start, c.pos),
            })
        }
        _ => {
            let value = c.integer()?;
            Ok(LiteralExpr {
                node: LiteralNode::Int(value),
                span: (start, c.pos),
            })
        }
    }
}

/// Parses a complete ring expression.
pub fn parse_ring_expr(text: &str) -> Result<RingExpr, ParseError> {
    let mut cursor = Cursor::new(text);
    let expr = ring_expr(&mut cursor)?;
    if !cursor.at_end() {
        return Err(cursor.error("trailing input after the ring expression"));
    }
    Ok(expr)
}

/// Errors from element parsing: either a syntax error with a position or a
/// shape problem reported by the ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementError {
    Syntax(ParseError),
    Shape(RingError),
}

impl fmt::Display for ElementError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementError::Syntax(e) => write!(f, "{e}"),
            ElementError::Shape(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ElementError {}

/// Parses an element literal in the syntax of `ring` and resolves it to a
/// canonical element.
pub fn parse_element(text: &str, ring: &FiniteRing) -> Result<Element, ElementError> {
    let mut cursor = Cursor::new(text);
    let ast = literal_expr(&mut cursor).map_err(ElementError::Syntax)?;
    if !cursor.at_end() {
        return Err(ElementError::Syntax(
            cursor.error("trailing input after the element literal"),
        ));
    }
    let lowered =
        lower_literal(&ast, ring.descriptor()).map_err(ElementError::Syntax)?;
    ring.element_from_literal(&lowered).map_err(ElementError::Shape)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn descriptor(text: &str) -> RingDescriptor {
        parse_ring_expr(text).unwrap().to_descriptor().unwrap()
    }

    #[test]
    fn parses_the_basic_forms() {
        assert_eq!(descriptor("Z(6)"), RingDescriptor::zn(6));
        assert_eq!(
            descriptor("M(2,Z(2)) x Z(9)"),
            RingDescriptor::product(
                RingDescriptor::matrix(2, RingDescriptor::zn(2)),
                RingDescriptor::zn(9)
            )
        );
        assert_eq!(
            descriptor("corner(Z(6),3)"),
            RingDescriptor::corner(RingDescriptor::zn(6), Literal::residue(3))
        );
    }

    #[test]
    fn product_is_left_associative() {
        assert_eq!(
            descriptor("Z(2) x Z(3) x Z(5)"),
            RingDescriptor::product(
                RingDescriptor::product(RingDescriptor::zn(2), RingDescriptor::zn(3)),
                RingDescriptor::zn(5)
            )
        );
        assert_eq!(
            descriptor("Z(2) x (Z(3) x Z(5))"),
            RingDescriptor::product(
                RingDescriptor::zn(2),
                RingDescriptor::product(RingDescriptor::zn(3), RingDescriptor::zn(5))
            )
        );
    }

    #[test]
    fn whitespace_is_irrelevant() {
        assert_eq!(descriptor("  T( 3 , Z( 2 ) ) "), descriptor("T(3,Z(2))"));
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_ring_expr("Z(6) y Z(2)").unwrap_err();
        assert_eq!(err.position, 5);
        let err = parse_ring_expr("M(2 Z(2))").unwrap_err();
        assert!(err.position >= 3);
    }

    #[test]
    fn element_parsing_examples() {
        let z6 = FiniteRing::build(RingDescriptor::zn(6)).unwrap();
        assert_eq!(parse_element("5", &z6).unwrap().index(), 5);
        assert_eq!(parse_element("-1", &z6).unwrap().index(), 5);

        let m = FiniteRing::build(RingDescriptor::matrix(2, RingDescriptor::zn(2))).unwrap();
        let e = parse_element("[[0,1],[0,0]]", &m).unwrap();
        assert_eq!(m.literal(e).to_string(), "[[0,1],[0,0]]");

        let t = FiniteRing::build(RingDescriptor::upper_triangular(2, RingDescriptor::zn(4)))
            .unwrap();
        assert!(matches!(
            parse_element("[[1,2],[3,0]]", &t),
            Err(ElementError::Shape(RingError::NotUpperTriangular { .. }))
        ));

        let p = FiniteRing::build(RingDescriptor::product(
            RingDescriptor::zn(4),
            RingDescriptor::zn(9),
        ))
        .unwrap();
        let e = parse_element("(2,3)", &p).unwrap();
        assert_eq!(p.literal(e).to_string(), "(2,3)");
    }
}
