//! Characters and real representations of elementary abelian 2-groups.
//!
//! A character of `(C₂)^r` is an `r`-bit vector `α`; bit `j` corresponds to
//! generator `j` and, in cohomology, to the variable `x_j`. Bit 0 is the
//! sphere factor, bits `1..=ℓ` the sign changes of the Stiefel frame.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::f2_poly::{Monomial, PolyF2, Vars};

const MAX_RANK: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    rank: u8,
    bits: u64,
}

impl Character {
    pub fn trivial(rank: usize) -> Result<Self> {
        Self::from_bits(rank, 0)
    }

    pub fn from_bits(rank: usize, bits: u64) -> Result<Self> {
        if rank == 0 || rank > MAX_RANK {
            return Err(Error::InvalidRank(rank));
        }
        if rank < MAX_RANK && bits >> rank != 0 {
            return Err(Error::RankMismatch {
                expected: rank,
                found: (MAX_RANK - bits.leading_zeros() as usize),
            });
        }
        Ok(Character {
            rank: rank as u8,
            bits,
        })
    }

    /// The standard character `χ_i = χ_{e_i}`.
    pub fn standard(rank: usize, i: usize) -> Result<Self> {
        if i >= rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: i + 1,
            });
        }
        Self::from_bits(rank, 1 << i)
    }

    /// Parses a bit string; character `j` of the string is bit `j`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut bits = 0u64;
        for (j, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' if j < MAX_RANK => bits |= 1 << j,
                '1' => return Err(Error::InvalidRank(s.chars().count())),
                _ => return Err(Error::parse(0, s, "character must be a string of 0/1")),
            }
        }
        Self::from_bits(s.chars().count(), bits)
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn bit(&self, j: usize) -> bool {
        j < self.rank() && self.bits >> j & 1 == 1
    }

    pub fn is_trivial(&self) -> bool {
        self.bits == 0
    }

    /// Product of characters: XOR of their index vectors.
    pub fn tensor(&self, other: &Character) -> Result<Character> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        Ok(Character {
            rank: self.rank,
            bits: self.bits ^ other.bits,
        })
    }

    /// First Stiefel–Whitney class `Σ_{α_j = 1} x_j`; requires the ambient
    /// variables to be exactly `x0..x_{r−1}`.
    pub fn sw1_linear_form(&self, vars: Vars) -> Result<PolyF2> {
        if vars != Vars::new(0, self.rank()) {
            return Err(Error::VarMismatch {
                expected: Vars::new(0, self.rank()),
                found: vars,
            });
        }
        PolyF2::from_monomials(
            vars,
            (0..self.rank())
                .filter(|&j| self.bit(j))
                .map(|j| Monomial::power(vars.count(), j, 1)),
        )
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.rank() {
            f.write_str(if self.bit(j) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A genuine representation: characters with positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RepSpec {
    rank: usize,
    summands: BTreeMap<Character, u32>,
}

impl RepSpec {
    pub fn empty(rank: usize) -> Result<Self> {
        if rank == 0 || rank > MAX_RANK {
            return Err(Error::InvalidRank(rank));
        }
        Ok(RepSpec {
            rank,
            summands: BTreeMap::new(),
        })
    }

    /// Repeated characters add up; zero multiplicities are dropped.
    pub fn new(rank: usize, summands: impl IntoIterator<Item = (Character, u32)>) -> Result<Self> {
        let mut rep = Self::empty(rank)?;
        for (c, m) in summands {
            rep.add(c, m)?;
        }
        Ok(rep)
    }

    fn add(&mut self, c: Character, mult: u32) -> Result<()> {
        if c.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: c.rank(),
            });
        }
        if mult > 0 {
            *self.summands.entry(c).or_insert(0) += mult;
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn summands(&self) -> &BTreeMap<Character, u32> {
        &self.summands
    }

    pub fn multiplicity(&self, c: &Character) -> u32 {
        self.summands.get(c).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u64 {
        self.summands.values().map(|&m| u64::from(m)).sum()
    }

    /// Whether `V^G ≠ 0`.
    pub fn has_trivial_summand(&self) -> bool {
        self.summands.keys().any(Character::is_trivial)
    }

    pub fn direct_sum(&self, other: &RepSpec) -> Result<RepSpec> {
        let mut out = self.clone();
        for (&c, &m) in &other.summands {
            out.add(c, m)?;
        }
        Ok(out)
    }

    /// Text form: one `<bitstring> <multiplicity>` line per summand, `#`
    /// starts a comment, rank is the bitstring length.
    pub fn parse(text: &str) -> Result<RepSpec> {
        let mut rep: Option<RepSpec> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut fields = content.split_whitespace();
            let bits = fields.next().expect("nonempty line");
            let Some(mult) = fields.next() else {
                return Err(Error::parse(line, content, "expected `<bitstring> <multiplicity>`"));
            };
            if let Some(extra) = fields.next() {
                return Err(Error::parse(line, extra, "unexpected trailing field"));
            }
            let c = Character::parse(bits).map_err(|e| match e {
                Error::Parse { token, reason, .. } => Error::parse(line, token, reason),
                other => Error::parse(line, bits, other.to_string()),
            })?;
            let mult: u32 = mult
                .parse()
                .map_err(|_| Error::parse(line, mult, "multiplicity must be a nonnegative integer"))?;
            let rep = match &mut rep {
                Some(r) => r,
                None => rep.insert(RepSpec::empty(c.rank())?),
            };
            if c.rank() != rep.rank {
                return Err(Error::parse(
                    line,
                    bits,
                    format!("rank {} differs from earlier rank {}", c.rank(), rep.rank),
                ));
            }
            rep.add(c, mult)?;
        }
        rep.ok_or_else(|| Error::parse(0, "", "no summands"))
    }

    pub fn to_text(&self) -> String {
        self.summands.iter().map(|(c, m)| format!("{c} {m}\n")).collect()
    }
}

/// The test representation
/// `χ₀^{⊕n} ⊕ ⨁_{i=1}^{ℓ} ((χ₀⊗χ_i) ⊕ χ_i^{⊕(n−i−1)})` of `(C₂)^{ℓ+1}`,
/// of dimension `n + (n−1) + ⋯ + (n−ℓ)`.
pub fn build_test_representation(n: u32, ell: u32) -> Result<RepSpec> {
    if ell < 1 || ell >= n {
        return Err(Error::InvalidFlagSpec { n, ell });
    }
    let rank = ell as usize + 1;
    let chi0 = Character::standard(rank, 0)?;
    let mut summands = vec![(chi0, n)];
    for i in 1..=ell {
        let chi = Character::standard(rank, i as usize)?;
        summands.push((chi0.tensor(&chi)?, 1));
        summands.push((chi, n - i - 1));
    }
    RepSpec::new(rank, summands)
}
