//! Exact rational values with a symbolic infinity.

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

pub type Q = Rational64;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

pub fn floor(x: &Q) -> i64 {
    x.floor().to_integer()
}

pub fn ceil(x: &Q) -> i64 {
    x.ceil().to_integer()
}

/// A value in `Q ∪ {∞}`. `Inf` sorts above every finite value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Val {
    Fin(Q),
    Inf,
}

impl Val {
    pub fn zero() -> Self {
        Val::Fin(Q::zero())
    }
    pub fn is_inf(&self) -> bool {
        matches!(self, Val::Inf)
    }
    pub fn fin(&self) -> Option<Q> {
        match self {
            Val::Fin(x) => Some(*x),
            Val::Inf => None,
        }
    }
    pub fn expect_fin(&self, what: &str) -> Q {
        self.fin().unwrap_or_else(|| panic!("{what}: unexpected infinite value"))
    }
    pub fn scale(&self, k: i64) -> Val {
        match self {
            Val::Fin(x) => Val::Fin(*x * q(k)),
            Val::Inf if k == 0 => Val::zero(),
            Val::Inf => Val::Inf,
        }
    }
    pub fn min(self, other: Val) -> Val {
        if self <= other {
            self
        } else {
            other
        }
    }
    pub fn to_f64(&self) -> f64 {
        match self {
            Val::Fin(x) => x.to_f64().unwrap_or(f64::NAN),
            Val::Inf => f64::INFINITY,
        }
    }
}

impl From<Q> for Val {
    fn from(x: Q) -> Self {
        Val::Fin(x)
    }
}

impl PartialOrd for Val {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Val {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Val::Inf, Val::Inf) => Ordering::Equal,
            (Val::Inf, _) => Ordering::Greater,
            (_, Val::Inf) => Ordering::Less,
            (Val::Fin(a), Val::Fin(b)) => a.cmp(b),
        }
    }
}

impl Add for Val {
    type Output = Val;
    fn add(self, o: Val) -> Val {
        match (self, o) {
            (Val::Fin(a), Val::Fin(b)) => Val::Fin(a + b),
            _ => Val::Inf,
        }
    }
}

impl Sub<Q> for Val {
    type Output = Val;
    fn sub(self, o: Q) -> Val {
        match self {
            Val::Fin(a) => Val::Fin(a - o),
            Val::Inf => Val::Inf,
        }
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Fin(x) => write!(f, "{x}"),
            Val::Inf => write!(f, "inf"),
        }
    }
}
