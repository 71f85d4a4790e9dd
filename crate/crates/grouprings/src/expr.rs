//! The group expression language: constructors, named groups and direct products.

use std::fmt;

use grouprings_core::group::families::{self, direct_product};
use grouprings_core::group::MAX_ORDER;
use grouprings_core::{CayleyGroup, GroupError};

/// A named group from the built-in catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Atom {
    Bj4,
    Bj5,
    Bj8,
    Bj9,
    Sg32_11,
    Sg32_12,
    Sg64_135,
    Q8xQ8,
}

impl Atom {
    pub const ALL: [Atom; 8] =
        [Atom::Bj4, Atom::Bj5, Atom::Bj8, Atom::Bj9, Atom::Sg32_11, Atom::Sg32_12, Atom::Sg64_135, Atom::Q8xQ8];

    pub fn name(self) -> &'static str {
        match self {
            Atom::Bj4 => "BJ4",
            Atom::Bj5 => "BJ5",
            Atom::Bj8 => "BJ8",
            Atom::Bj9 => "BJ9",
            Atom::Sg32_11 => "SG32_11",
            Atom::Sg32_12 => "SG32_12",
            Atom::Sg64_135 => "SG64_135",
            Atom::Q8xQ8 => "Q8xQ8",
        }
    }

    pub fn order(self) -> u64 {
        match self {
            Atom::Bj4 | Atom::Bj5 | Atom::Bj8 | Atom::Sg32_11 | Atom::Sg32_12 => 32,
            Atom::Bj9 | Atom::Sg64_135 | Atom::Q8xQ8 => 64,
        }
    }

    fn build(self) -> Result<CayleyGroup, GroupError> {
        match self {
            Atom::Bj4 => families::bj4(),
            Atom::Bj5 => families::bj5(),
            Atom::Bj8 => families::bj8(),
            Atom::Bj9 => families::bj9(),
            Atom::Sg32_11 => families::sg32_11(),
            Atom::Sg32_12 => families::sg32_12(),
            Atom::Sg64_135 => families::sg64_135(),
            Atom::Q8xQ8 => families::q8xq8(),
        }
    }
}

/// Parsed group expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    /// `C(n)`, cyclic of order `n`.
    Cyclic(u32),
    /// `D(n)`, dihedral of order `n`.
    Dihedral(u32),
    /// `Q(n)`, generalized quaternion of order `n`.
    Quaternion(u32),
    Symmetric(u32),
    Alternating(u32),
    /// `G(p,m,n)`.
    Gpmn(u32, u32, u32),
    /// `MC(m,k,r)`: `C_m x| C_k` with `a^b = a^r`.
    Metacyclic(u32, u32, u32),
    Sl2(u32),
    Named(Atom),
    Product(Box<GroupExpr>, Box<GroupExpr>),
}

impl GroupExpr {
    pub fn order(&self) -> u64 {
        match self {
            GroupExpr::Cyclic(n) | GroupExpr::Dihedral(n) | GroupExpr::Quaternion(n) => *n as u64,
            GroupExpr::Symmetric(n) => (1..=*n as u64).product(),
            GroupExpr::Alternating(n) => ((1..=*n as u64).product::<u64>() / 2).max(1),
            GroupExpr::Gpmn(p, m, n) => (*p as u64).saturating_pow(m + n),
            GroupExpr::Metacyclic(m, k, _) => *m as u64 * *k as u64,
            GroupExpr::Sl2(q) => {
                let q = *q as u64;
                q * (q * q - 1)
            }
            GroupExpr::Named(a) => a.order(),
            GroupExpr::Product(a, b) => a.order().saturating_mul(b.order()),
        }
    }

    pub fn build(&self) -> Result<CayleyGroup, GroupError> {
        match self {
            GroupExpr::Cyclic(n) => families::cyclic(*n),
            GroupExpr::Dihedral(n) => families::dihedral(*n),
            GroupExpr::Quaternion(n) => families::generalized_quaternion(*n),
            GroupExpr::Symmetric(n) => families::symmetric(*n as usize),
            GroupExpr::Alternating(n) => families::alternating(*n as usize),
            GroupExpr::Gpmn(p, m, n) => families::gpmn(*p, *m, *n),
            GroupExpr::Metacyclic(m, k, r) => families::metacyclic(*m, *k, *r),
            GroupExpr::Sl2(q) => families::sl2(*q),
            GroupExpr::Named(a) => a.build(),
            GroupExpr::Product(a, b) => direct_product(&a.build()?, &b.build()?),
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "C({n})"),
            GroupExpr::Dihedral(n) => write!(f, "D({n})"),
            GroupExpr::Quaternion(n) => write!(f, "Q({n})"),
            GroupExpr::Symmetric(n) => write!(f, "S({n})"),
            GroupExpr::Alternating(n) => write!(f, "A({n})"),
            GroupExpr::Gpmn(p, m, n) => write!(f, "G({p},{m},{n})"),
            GroupExpr::Metacyclic(m, k, r) => write!(f, "MC({m},{k},{r})"),
            GroupExpr::Sl2(q) => write!(f, "SL2({q})"),
            GroupExpr::Named(a) => f.write_str(a.name()),
            GroupExpr::Product(a, b) => match **b {
                GroupExpr::Product(..) => write!(f, "{a} x ({b})"),
                _ => write!(f, "{a} x {b}"),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("byte {offset}: expected {}", expected.join(" or "))]
    Syntax { offset: usize, expected: Vec<&'static str> },
    #[error("byte {offset}: {message}")]
    Semantic { offset: usize, message: String },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::Semantic { offset, .. } => *offset,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Ctor {
    C,
    D,
    Q,
    S,
    A,
    G,
    Mc,
    Sl2,
}

impl Ctor {
    fn arity(self) -> usize {
        match self {
            Ctor::G | Ctor::Mc => 3,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Ctor(Ctor),
    Atom(Atom),
    Times,
    LParen,
    RParen,
    Comma,
    Num(u32),
    End,
}

const EXPECT_GROUP: &[&str] = &["a constructor (C, D, Q, S, A, G, MC, SL2)", "a named group", "'('"];

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    /// Next token and its starting offset, without consuming it.
    fn peek(&mut self) -> Result<(Tok, usize, usize), ParseError> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let start = self.pos;
        let Some(c) = rest.chars().next() else {
            return Ok((Tok::End, start, 0));
        };
        let fixed: [(&str, Tok); 15] = [
            ("SG64_135", Tok::Atom(Atom::Sg64_135)),
            ("SG32_11", Tok::Atom(Atom::Sg32_11)),
            ("SG32_12", Tok::Atom(Atom::Sg32_12)),
            ("Q8xQ8", Tok::Atom(Atom::Q8xQ8)),
            ("BJ4", Tok::Atom(Atom::Bj4)),
            ("BJ5", Tok::Atom(Atom::Bj5)),
            ("BJ8", Tok::Atom(Atom::Bj8)),
            ("BJ9", Tok::Atom(Atom::Bj9)),
            ("SL2", Tok::Ctor(Ctor::Sl2)),
            ("MC", Tok::Ctor(Ctor::Mc)),
            ("C", Tok::Ctor(Ctor::C)),
            ("D", Tok::Ctor(Ctor::D)),
            ("Q", Tok::Ctor(Ctor::Q)),
            ("S", Tok::Ctor(Ctor::S)),
            ("A", Tok::Ctor(Ctor::A)),
        ];
        for (word, tok) in fixed {
            if rest.starts_with(word) {
                return Ok((tok, start, word.len()));
            }
        }
        if rest.starts_with('G') {
            return Ok((Tok::Ctor(Ctor::G), start, 1));
        }
        match c {
            'x' | '×' => return Ok((Tok::Times, start, c.len_utf8())),
            '(' => return Ok((Tok::LParen, start, 1)),
            ')' => return Ok((Tok::RParen, start, 1)),
            ',' => return Ok((Tok::Comma, start, 1)),
            _ => {}
        }
        let digits = rest.bytes().take_while(u8::is_ascii_digit).count();
        if digits > 0 {
            let n = rest[..digits]
                .parse::<u32>()
                .map_err(|_| ParseError::Semantic { offset: start, message: "number too large".into() })?;
            return Ok((Tok::Num(n), start, digits));
        }
        Err(ParseError::Syntax { offset: start, expected: vec!["a group expression token"] })
    }

    fn next(&mut self) -> Result<(Tok, usize), ParseError> {
        let (t, at, len) = self.peek()?;
        self.pos += len;
        Ok((t, at))
    }

    fn expect(&mut self, want: Tok, label: &'static str) -> Result<usize, ParseError> {
        let (t, at) = self.next()?;
        if t == want {
            Ok(at)
        } else {
            Err(ParseError::Syntax { offset: at, expected: vec![label] })
        }
    }
}

/// Parses a group expression. Products are left associative.
pub fn parse(src: &str) -> Result<GroupExpr, ParseError> {
    let mut lx = Lexer { src, pos: 0 };
    let e = parse_product(&mut lx)?;
    let (t, at) = lx.next()?;
    if t != Tok::End {
        return Err(ParseError::Syntax { offset: at, expected: vec!["'x'", "end of input"] });
    }
    if e.order() > MAX_ORDER as u64 {
        return Err(ParseError::Semantic {
            offset: 0,
            message: format!("group order {} exceeds the limit {MAX_ORDER}", e.order()),
        });
    }
    Ok(e)
}

fn parse_product(lx: &mut Lexer<'_>) -> Result<GroupExpr, ParseError> {
    let mut acc = parse_factor(lx)?;
    while lx.peek()?.0 == Tok::Times {
        lx.next()?;
        let rhs = parse_factor(lx)?;
        acc = GroupExpr::Product(Box::new(acc), Box::new(rhs));
    }
    Ok(acc)
}

fn parse_factor(lx: &mut Lexer<'_>) -> Result<GroupExpr, ParseError> {
    let (t, at) = lx.next()?;
    match t {
        Tok::Atom(a) => Ok(GroupExpr::Named(a)),
        Tok::LParen => {
            let e = parse_product(lx)?;
            lx.expect(Tok::RParen, "')'")?;
            Ok(e)
        }
        Tok::Ctor(c) => {
            lx.expect(Tok::LParen, "'('")?;
            let mut args = Vec::with_capacity(c.arity());
            for i in 0..c.arity() {
                if i > 0 {
                    lx.expect(Tok::Comma, "','")?;
                }
                match lx.next()? {
                    (Tok::Num(n), _) => args.push(n),
                    (_, off) => return Err(ParseError::Syntax { offset: off, expected: vec!["an integer"] }),
                }
            }
            lx.expect(Tok::RParen, "')'")?;
            validate(c, &args).map_err(|message| ParseError::Semantic { offset: at, message })
        }
        _ => Err(ParseError::Syntax { offset: at, expected: EXPECT_GROUP.to_vec() }),
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn validate(c: Ctor, a: &[u32]) -> Result<GroupExpr, String> {
    Ok(match c {
        Ctor::C if a[0] >= 1 => GroupExpr::Cyclic(a[0]),
        Ctor::C => return Err("C(n) needs n >= 1".into()),
        Ctor::D if a[0] >= 4 && a[0].is_multiple_of(2) => GroupExpr::Dihedral(a[0]),
        Ctor::D => return Err(format!("D({}) needs an even order of at least 4", a[0])),
        Ctor::Q if a[0] >= 8 && a[0].is_power_of_two() => GroupExpr::Quaternion(a[0]),
        Ctor::Q => return Err(format!("Q({}) needs a power of two of at least 8", a[0])),
        Ctor::S if (1..=5).contains(&a[0]) => GroupExpr::Symmetric(a[0]),
        Ctor::S => return Err(format!("S({}) needs a degree between 1 and 5", a[0])),
        Ctor::A if (1..=5).contains(&a[0]) => GroupExpr::Alternating(a[0]),
        Ctor::A => return Err(format!("A({}) needs a degree between 1 and 5", a[0])),
        Ctor::Sl2 if [2, 3, 5].contains(&a[0]) => GroupExpr::Sl2(a[0]),
        Ctor::Sl2 => return Err(format!("SL2({}) is only available for q in 2, 3, 5", a[0])),
        Ctor::G => {
            let (p, m, n) = (a[0], a[1], a[2]);
            if !is_prime(p) || m < 2 || n < 1 {
                return Err(format!("G({p},{m},{n}) needs p prime, m >= 2 and n >= 1"));
            }
            GroupExpr::Gpmn(p, m, n)
        }
        Ctor::Mc => {
            let (m, k, r) = (a[0], a[1], a[2]);
            if m < 2 || k < 2 {
                return Err(format!("MC({m},{k},{r}) needs m >= 2 and k >= 2"));
            }
            let (mm, rr) = (m as u64, r as u64 % m as u64);
            let pow = (0..k).fold(1u64, |acc, _| acc * rr % mm);
            if pow != 1 {
                return Err(format!("MC({m},{k},{r}): {r}^{k} is not 1 modulo {m}"));
            }
            GroupExpr::Metacyclic(m, k, r)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn constructors_and_atoms() {
        assert_eq!(parse("G(2,2,3)").unwrap(), GroupExpr::Gpmn(2, 2, 3));
        assert_eq!(parse(" MC(17, 8, 16) ").unwrap(), GroupExpr::Metacyclic(17, 8, 16));
        assert_eq!(parse("Q8xQ8").unwrap(), GroupExpr::Named(Atom::Q8xQ8));
        assert_eq!(parse("SL2(3)").unwrap().order(), 24);
        let e = parse("BJ4xC(3)").unwrap();
        assert_eq!(e, GroupExpr::Product(Box::new(GroupExpr::Named(Atom::Bj4)), Box::new(GroupExpr::Cyclic(3))));
        assert_eq!(parse("D(10) × C(5)").unwrap().order(), 50);
        assert_eq!(parse("C(2) x (C(3) x C(5))").unwrap().to_string(), "C(2) x (C(3) x C(5))");
    }

    #[test]
    fn errors_carry_offsets() {
        let e = parse("Q(6)").unwrap_err();
        assert!(matches!(e, ParseError::Semantic { offset: 0, .. }), "{e}");
        let e = parse("C(2) x D(7)").unwrap_err();
        assert_eq!(e.offset(), 7);
        let e = parse("MC(7,3,3)").unwrap_err();
        assert!(e.to_string().contains("not 1 modulo 7"));
        let e = parse("G(2,2 3)").unwrap_err();
        assert_eq!(e, ParseError::Syntax { offset: 6, expected: vec!["','"] });
        let e = parse("C(2) C(3)").unwrap_err();
        assert_eq!(e.offset(), 5);
        assert!(matches!(parse("").unwrap_err(), ParseError::Syntax { offset: 0, .. }));
        assert!(matches!(parse("Z(3)").unwrap_err(), ParseError::Syntax { offset: 0, .. }));
        assert!(parse("C(1000) x C(2)").is_err());
    }

    #[test]
    fn builds_match_orders() {
        for s in ["C(6)", "D(8)", "Q(16)", "S(4)", "A(4)", "G(2,2,2)", "MC(7,3,2)", "SL2(3)", "BJ9", "S(3) x C(3)"] {
            let e = parse(s).unwrap();
            assert_eq!(e.build().unwrap().order() as u64, e.order(), "{s}");
        }
    }

    fn leaf() -> impl Strategy<Value = GroupExpr> {
        prop_oneof![
            (1u32..40).prop_map(GroupExpr::Cyclic),
            (2u32..20).prop_map(|n| GroupExpr::Dihedral(2 * n)),
            (3u32..6).prop_map(|k| GroupExpr::Quaternion(1 << k)),
            (1u32..=5).prop_map(GroupExpr::Symmetric),
            (1u32..=5).prop_map(GroupExpr::Alternating),
            prop::sample::select(vec![(2, 2, 2), (2, 2, 3), (3, 2, 2), (2, 3, 2)])
                .prop_map(|(p, m, n)| GroupExpr::Gpmn(p, m, n)),
            prop::sample::select(vec![(7, 3, 2), (17, 8, 16), (5, 4, 2), (3, 4, 2)])
                .prop_map(|(m, k, r)| GroupExpr::Metacyclic(m, k, r)),
            prop::sample::select(vec![2u32, 3, 5]).prop_map(GroupExpr::Sl2),
            prop::sample::select(Atom::ALL.to_vec()).prop_map(GroupExpr::Named),
        ]
    }

    fn expr() -> impl Strategy<Value = GroupExpr> {
        leaf().prop_recursive(3, 6, 2, |inner| {
            (inner.clone(), inner).prop_map(|(a, b)| GroupExpr::Product(Box::new(a), Box::new(b)))
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(e in expr()) {
            prop_assume!(e.order() <= MAX_ORDER as u64);
            prop_assert_eq!(parse(&e.to_string()).unwrap(), e.clone());
            let compact: String = e.to_string().chars().filter(|c| !c.is_whitespace()).collect();
            prop_assert_eq!(parse(&compact).unwrap(), e);
        }
    }
}
