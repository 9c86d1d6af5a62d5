use std::fmt;
use std::ops::{Add, AddAssign, Index, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::rational::{fmt_q, to_f64, Q};

pub const MAX_RANK: usize = 4;

/// An integral weight in the fundamental-weight basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    rank: u8,
    c: [i64; MAX_RANK],
}

impl Weight {
    pub fn new(coords: &[i64]) -> Self {
        assert!(coords.len() <= MAX_RANK, "rank above {MAX_RANK}");
        let mut c = [0; MAX_RANK];
        c[..coords.len()].copy_from_slice(coords);
        Weight { rank: coords.len() as u8, c }
    }

    pub fn zero(rank: usize) -> Self {
        Weight::new(&vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn coords(&self) -> &[i64] {
        &self.c[..self.rank()]
    }

    pub fn is_dominant(&self) -> bool {
        self.coords().iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|&x| x == 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = *self;
        for x in out.c.iter_mut() {
            *x *= k;
        }
        out
    }

    pub fn to_rat(&self) -> RatWeight {
        RatWeight::from_int(self)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords().iter().map(|&x| x as f64).collect()
    }
}

impl Index<usize> for Weight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.coords()[i]
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(mut self, rhs: Weight) -> Weight {
        debug_assert_eq!(self.rank, rhs.rank);
        for i in 0..MAX_RANK {
            self.c[i] += rhs.c[i];
        }
        self
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        *self = *self + rhs;
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        self + (-rhs)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A weight-space point with rational coordinates in the fundamental-weight basis.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatWeight {
    rank: u8,
    c: [Q; MAX_RANK],
}

const QZ: Q = Q::new_raw(0, 1);

impl RatWeight {
    pub fn new(coords: &[Q]) -> Self {
        assert!(coords.len() <= MAX_RANK, "rank above {MAX_RANK}");
        let mut c = [QZ; MAX_RANK];
        c[..coords.len()].copy_from_slice(coords);
        RatWeight { rank: coords.len() as u8, c }
    }

    pub fn zero(rank: usize) -> Self {
        RatWeight { rank: rank as u8, c: [QZ; MAX_RANK] }
    }

    pub fn from_int(w: &Weight) -> Self {
        let v: Vec<Q> = w.coords().iter().map(|&x| Q::from_integer(x)).collect();
        RatWeight::new(&v)
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn coords(&self) -> &[Q] {
        &self.c[..self.rank()]
    }

    pub fn scale(&self, k: Q) -> Self {
        let mut out = *self;
        for x in out.c.iter_mut() {
            *x *= k;
        }
        out
    }

    pub fn is_dominant(&self) -> bool {
        self.coords().iter().all(|x| !x.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(Zero::is_zero)
    }

    /// The integral weight with these coordinates, if every coordinate is an integer.
    pub fn to_int(&self) -> Option<Weight> {
        let v: Option<Vec<i64>> = self
            .coords()
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect();
        v.map(|v| Weight::new(&v))
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords().iter().map(to_f64).collect()
    }
}

impl Index<usize> for RatWeight {
    type Output = Q;
    fn index(&self, i: usize) -> &Q {
        &self.coords()[i]
    }
}

impl Add for RatWeight {
    type Output = RatWeight;
    fn add(mut self, rhs: RatWeight) -> RatWeight {
        debug_assert_eq!(self.rank, rhs.rank);
        for i in 0..self.rank() {
            self.c[i] += rhs.c[i];
        }
        self
    }
}

impl Sub for RatWeight {
    type Output = RatWeight;
    fn sub(self, rhs: RatWeight) -> RatWeight {
        self + (-rhs)
    }
}

impl Neg for RatWeight {
    type Output = RatWeight;
    fn neg(self) -> RatWeight {
        self.scale(Q::from_integer(-1))
    }
}

impl fmt::Display for RatWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", fmt_q(x))?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for RatWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
