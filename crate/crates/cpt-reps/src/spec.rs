//! Representation combinator trees.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RepSpec {
    Trivial(usize),
    Vector,
    /// The first cover factor acts on the holomorphic coordinates.
    WeylLeft,
    /// The second cover factor acts through its inverse transpose.
    WeylRight,
    Dual(Box<RepSpec>),
    Tensor(Box<RepSpec>, Box<RepSpec>),
    Sum(Box<RepSpec>, Box<RepSpec>),
    Antisym2(Box<RepSpec>),
    Sym2(Box<RepSpec>),
    /// Same restriction to L↑+, extra sign on time-reversing elements of the full group.
    Pseudo(Box<RepSpec>),
}

impl RepSpec {
    pub fn dual(r: RepSpec) -> Self {
        RepSpec::Dual(Box::new(r))
    }

    pub fn tensor(a: RepSpec, b: RepSpec) -> Self {
        RepSpec::Tensor(Box::new(a), Box::new(b))
    }

    pub fn sum(a: RepSpec, b: RepSpec) -> Self {
        RepSpec::Sum(Box::new(a), Box::new(b))
    }

    pub fn antisym2(r: RepSpec) -> Self {
        RepSpec::Antisym2(Box::new(r))
    }

    pub fn sym2(r: RepSpec) -> Self {
        RepSpec::Sym2(Box::new(r))
    }

    pub fn pseudo(r: RepSpec) -> Self {
        RepSpec::Pseudo(Box::new(r))
    }

    /// weyl_right (+) weyl_left, so that γ⁵ = diag(−1, 1) in the chiral basis.
    pub fn dirac() -> Self {
        RepSpec::sum(RepSpec::WeylRight, RepSpec::WeylLeft)
    }

    /// Real dimension of V for spacetime dimension `d`.
    pub fn dim(&self, d: usize) -> usize {
        match self {
            RepSpec::Trivial(n) => *n,
            RepSpec::Vector => d,
            RepSpec::WeylLeft | RepSpec::WeylRight => 4,
            RepSpec::Dual(r) | RepSpec::Pseudo(r) => r.dim(d),
            RepSpec::Tensor(a, b) => a.dim(d) * b.dim(d),
            RepSpec::Sum(a, b) => a.dim(d) + b.dim(d),
            RepSpec::Antisym2(r) => {
                let n = r.dim(d);
                n * n.saturating_sub(1) / 2
            }
            RepSpec::Sym2(r) => {
                let n = r.dim(d);
                n * (n + 1) / 2
            }
        }
    }

    pub fn is_spinorial(&self) -> bool {
        match self {
            RepSpec::WeylLeft | RepSpec::WeylRight => true,
            RepSpec::Trivial(_) | RepSpec::Vector => false,
            RepSpec::Dual(r) | RepSpec::Antisym2(r) | RepSpec::Sym2(r) | RepSpec::Pseudo(r) => r.is_spinorial(),
            RepSpec::Tensor(a, b) | RepSpec::Sum(a, b) => a.is_spinorial() || b.is_spinorial(),
        }
    }

    pub fn is_twisted(&self) -> bool {
        match self {
            RepSpec::Pseudo(_) => true,
            RepSpec::Trivial(_) | RepSpec::Vector | RepSpec::WeylLeft | RepSpec::WeylRight => false,
            RepSpec::Dual(r) | RepSpec::Antisym2(r) | RepSpec::Sym2(r) => r.is_twisted(),
            RepSpec::Tensor(a, b) | RepSpec::Sum(a, b) => a.is_twisted() || b.is_twisted(),
        }
    }

    /// The same tree with every pseudo twist removed.
    pub fn untwisted(&self) -> RepSpec {
        match self {
            RepSpec::Pseudo(r) => r.untwisted(),
            RepSpec::Dual(r) => RepSpec::dual(r.untwisted()),
            RepSpec::Antisym2(r) => RepSpec::antisym2(r.untwisted()),
            RepSpec::Sym2(r) => RepSpec::sym2(r.untwisted()),
            RepSpec::Tensor(a, b) => RepSpec::tensor(a.untwisted(), b.untwisted()),
            RepSpec::Sum(a, b) => RepSpec::sum(a.untwisted(), b.untwisted()),
            leaf => leaf.clone(),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            RepSpec::Sum(..) => 0,
            RepSpec::Tensor(..) => 1,
            _ => 2,
        }
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

/// Surface syntax; `(+)` binds weaker than `(x)` and both associate to the left.
impl fmt::Display for RepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepSpec::Trivial(n) => write!(f, "trivial({n})"),
            RepSpec::Vector => f.write_str("vector"),
            RepSpec::WeylLeft => f.write_str("weyl_left"),
            RepSpec::WeylRight => f.write_str("weyl_right"),
            RepSpec::Dual(r) => write!(f, "dual({r})"),
            RepSpec::Antisym2(r) => write!(f, "antisym2({r})"),
            RepSpec::Sym2(r) => write!(f, "sym2({r})"),
            RepSpec::Pseudo(r) => write!(f, "pseudo({r})"),
            RepSpec::Tensor(a, b) => {
                a.fmt_operand(f, 1)?;
                f.write_str(" (x) ")?;
                b.fmt_operand(f, 2)
            }
            RepSpec::Sum(a, b) => {
                a.fmt_operand(f, 0)?;
                f.write_str(" (+) ")?;
                b.fmt_operand(f, 1)
            }
        }
    }
}
