//! Coupling monomials over the edge weight `u`, the loop marker `h`, the vertex couplings
//! `l_k`, and the auxiliary indeterminates `a, p, q, c`.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Indeterminates that may appear in a coefficient. The derived order is the canonical
/// symbol order used for printing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    /// Edge weight.
    U,
    /// Loop grading.
    Hbar,
    /// Vertex coupling of the given degree.
    Lambda(u32),
    A,
    P,
    Q,
    C,
}

impl Symbol {
    pub fn name(&self) -> String {
        match self {
            Symbol::U => "u".into(),
            Symbol::Hbar => "h".into(),
            Symbol::Lambda(k) => format!("l{k}"),
            Symbol::A => "a".into(),
            Symbol::P => "p".into(),
            Symbol::Q => "q".into(),
            Symbol::C => "c".into(),
        }
    }

    pub fn parse(s: &str) -> Option<Symbol> {
        match s {
            "u" => Some(Symbol::U),
            "h" | "hbar" => Some(Symbol::Hbar),
            "a" => Some(Symbol::A),
            "p" => Some(Symbol::P),
            "q" => Some(Symbol::Q),
            "c" => Some(Symbol::C),
            _ => s.strip_prefix('l').and_then(|k| k.parse::<u32>().ok()).filter(|k| *k >= 1).map(Symbol::Lambda),
        }
    }
}

/// A Laurent monomial. Entries are sorted by symbol and carry no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[(Symbol, i32); 4]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(s: Symbol) -> Self {
        Monomial::from_pairs([(s, 1)])
    }

    pub fn pow_of(s: Symbol, e: i32) -> Self {
        Monomial::from_pairs([(s, e)])
    }

    pub fn lambda(k: u32) -> Self {
        Monomial::var(Symbol::Lambda(k))
    }

    pub fn from_pairs<I: IntoIterator<Item = (Symbol, i32)>>(pairs: I) -> Self {
        let mut m = Monomial::one();
        for (s, e) in pairs {
            m.add_exp(s, e);
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exp(&self, s: Symbol) -> i32 {
        self.exps.binary_search_by(|(t, _)| t.cmp(&s)).map(|i| self.exps[i].1).unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Symbol, i32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.exp(s) != 0
    }

    /// Adds `e` to the exponent of `s`, dropping the entry when it reaches zero.
    pub fn add_exp(&mut self, s: Symbol, e: i32) {
        if e == 0 {
            return;
        }
        match self.exps.binary_search_by(|(t, _)| t.cmp(&s)) {
            Ok(i) => {
                self.exps[i].1 += e;
                if self.exps[i].1 == 0 {
                    self.exps.remove(i);
                }
            }
            Err(i) => self.exps.insert(i, (s, e)),
        }
    }

    pub fn with_exp(&self, s: Symbol, e: i32) -> Self {
        let mut m = self.clone();
        let cur = m.exp(s);
        m.add_exp(s, e - cur);
        m
    }

    pub fn without(&self, s: Symbol) -> Self {
        self.with_exp(s, 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = SmallVec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.exps, &other.exps);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { exps: out }
    }

    pub fn inv(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&(s, e)| (s, -e)).collect() }
    }

    pub fn pow(&self, n: i32) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial { exps: self.exps.iter().map(|&(s, e)| (s, e * n)).collect() }
    }

    /// Total number of vertex couplings, `sum_k exp(l_k)`.
    pub fn lambda_count(&self) -> i32 {
        self.exps.iter().filter(|(s, _)| matches!(s, Symbol::Lambda(_))).map(|(_, e)| e).sum()
    }

    /// Total half-edge content `sum_k k * exp(l_k)`.
    pub fn lambda_half_edges(&self) -> i64 {
        self.exps
            .iter()
            .filter_map(|(s, e)| match s {
                Symbol::Lambda(k) => Some(*k as i64 * *e as i64),
                _ => None,
            })
            .sum()
    }

    fn lambdas(&self) -> impl Iterator<Item = (u32, i32)> + '_ {
        self.exps.iter().filter_map(|(s, e)| match s {
            Symbol::Lambda(k) => Some((*k, *e)),
            _ => None,
        })
    }
}

/// Canonical order: `u` exponent, then `h` exponent, then total coupling degree, then the
/// coupling exponents by ascending index, then `a, p, q, c`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |m: &Monomial| (m.exp(Symbol::U), m.exp(Symbol::Hbar), m.lambda_count());
        key(self)
            .cmp(&key(other))
            .then_with(|| {
                let mut a = self.lambdas().peekable();
                let mut b = other.lambdas().peekable();
                loop {
                    match (a.peek().copied(), b.peek().copied()) {
                        (None, None) => return Ordering::Equal,
                        (Some(_), None) => return Ordering::Greater,
                        (None, Some(_)) => return Ordering::Less,
                        (Some((ka, ea)), Some((kb, eb))) => {
                            if ka != kb {
                                // lower index present on one side only: that side sorts first
                                return if ka < kb { Ordering::Less } else { Ordering::Greater };
                            }
                            if ea != eb {
                                return eb.cmp(&ea);
                            }
                            a.next();
                            b.next();
                        }
                    }
                }
            })
            .then_with(|| {
                let aux = |m: &Monomial| [Symbol::A, Symbol::P, Symbol::Q, Symbol::C].map(|s| m.exp(s));
                aux(self).cmp(&aux(other))
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `u^4 l2 l4`; the empty monomial prints as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (s, e) in self.iter() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", s.name())?;
            } else {
                write!(f, "{}^{}", s.name(), e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_cancels_exponents() {
        let m = Monomial::from_pairs([(Symbol::U, 2), (Symbol::Lambda(3), 1)]);
        let n = Monomial::from_pairs([(Symbol::U, -2), (Symbol::A, 1)]);
        let p = m.mul(&n);
        assert_eq!(p.exp(Symbol::U), 0);
        assert_eq!(p.to_string(), "l3 a");
        assert!(m.mul(&m.inv()).is_one());
    }

    #[test]
    fn canonical_order_puts_u_first() {
        let a = Monomial::from_pairs([(Symbol::U, 4), (Symbol::Lambda(2), 1), (Symbol::Lambda(4), 1)]);
        let b = Monomial::from_pairs([(Symbol::U, 3), (Symbol::Lambda(6), 1)]);
        assert!(b < a);
        assert!(Monomial::one() < Monomial::var(Symbol::U));
        assert_eq!(a.to_string(), "u^4 l2 l4");
    }

    #[test]
    fn symbol_parse_round_trip() {
        for s in [Symbol::U, Symbol::Hbar, Symbol::Lambda(12), Symbol::C] {
            assert_eq!(Symbol::parse(&s.name()), Some(s));
        }
        assert_eq!(Symbol::parse("l0"), None);
    }
}
