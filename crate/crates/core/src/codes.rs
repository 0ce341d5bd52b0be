//! Binary linear codes over F2 and their cosets.
//!
//! A code is a subspace of F2^t given by generator rows. Codes are kept in a
//! canonical form (reduced row echelon generators, pivots in ascending
//! coordinate order), which makes equality, membership tests, and coset
//! enumeration deterministic. The property that matters downstream is
//! *doubly even*: every codeword has Hamming weight divisible by 4. Quotients
//! of hypercubes by doubly even codes are exactly the graphs that carry an
//! Adinkra structure.
//!
//! Bit conventions: coordinate `i` of a codeword is bit `i` of a `u64`
//! (so the ambient dimension is capped at 64), and the textual form writes
//! coordinate 0 first. Lexicographic comparisons are on the textual form.

use thiserror::Error;

/// Default cap on the number of quotient vertices (2^(t - dim)).
pub const DEFAULT_MAX_VERTICES: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("ambient dimension must be positive")]
    EmptyAmbient,
    #[error("ambient dimension {t} exceeds the supported maximum of 64")]
    AmbientTooLarge { t: usize },
    #[error("generator {index} has support outside the ambient dimension {t}")]
    GeneratorOutOfRange { index: usize, t: usize },
    #[error("invalid character '{found}' at position {position}; expected '0' or '1'")]
    InvalidCharacter { position: usize, found: char },
    #[error("generator rows have unequal lengths ({expected} vs {found})")]
    RaggedGenerators { expected: usize, found: usize },
    #[error("quotient needs {needed} vertices, above the cap of {cap} (set ADINKRA_MAX_V to raise it)")]
    TooLarge { needed: u128, cap: usize },
}

/// A binary linear code in canonical (reduced row echelon) form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    t: usize,
    generators: Vec<u64>,
    pivots: Vec<usize>,
    doubly_even: bool,
}

/// A coset of a code inside F2^t, named by its lexicographically minimal
/// element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Coset {
    pub representative: u64,
}

/// Key under which `bits` sorts in textual lexicographic order
/// (coordinate 0 is the most significant position).
pub fn lex_key(bits: u64, t: usize) -> u64 {
    debug_assert!(t >= 1 && t <= 64);
    bits.reverse_bits() >> (64 - t)
}

/// Render `bits` as a 0/1 string of length `t`, coordinate 0 first.
pub fn bits_to_string(bits: u64, t: usize) -> String {
    (0..t)
        .map(|i| if bits >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Parse a 0/1 string into a coordinate mask.
pub fn parse_bitstring(s: &str) -> Result<u64, CodeError> {
    if s.len() > 64 {
        return Err(CodeError::AmbientTooLarge { t: s.len() });
    }
    let mut bits = 0u64;
    for (i, c) in s.chars().enumerate() {
        match c {
            '0' => {}
            '1' => bits |= 1 << i,
            found => return Err(CodeError::InvalidCharacter { position: i, found }),
        }
    }
    Ok(bits)
}

/// Canonicalize a generating set into a [`BinaryCode`].
///
/// Runs Gaussian elimination to a reduced row echelon basis and computes the
/// doubly even flag by enumerating all 2^dim codewords.
pub fn canonicalize(generators: &[u64], t: usize) -> Result<BinaryCode, CodeError> {
    if t == 0 {
        return Err(CodeError::EmptyAmbient);
    }
    if t > 64 {
        return Err(CodeError::AmbientTooLarge { t });
    }
    let mask = ones_mask(t);
    for (index, &g) in generators.iter().enumerate() {
        if g & !mask != 0 {
            return Err(CodeError::GeneratorOutOfRange { index, t });
        }
    }
    let mut rows: Vec<u64> = generators.to_vec();
    let pivots = rref_in_place(&mut rows, t);
    let mut code = BinaryCode {
        t,
        generators: rows,
        pivots,
        doubly_even: false,
    };
    code.doubly_even = code.codewords().iter().all(|w| w.count_ones() % 4 == 0);
    Ok(code)
}

fn ones_mask(t: usize) -> u64 {
    if t == 64 {
        u64::MAX
    } else {
        (1u64 << t) - 1
    }
}

/// In-place RREF over F2; returns pivot columns and drops zero rows.
fn rref_in_place(rows: &mut Vec<u64>, t: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..t {
        let Some(i) = (r..rows.len()).find(|&i| rows[i] >> col & 1 == 1) else {
            continue;
        };
        rows.swap(r, i);
        for j in 0..rows.len() {
            if j != r && rows[j] >> col & 1 == 1 {
                rows[j] ^= rows[r];
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

impl BinaryCode {
    /// The zero code in F2^t; its quotient graph is the hypercube Q_t.
    pub fn hypercube(t: usize) -> Result<Self, CodeError> {
        canonicalize(&[], t)
    }

    /// Canonicalize from generator strings of equal length.
    pub fn from_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self, CodeError> {
        let Some(first) = rows.first() else {
            return Err(CodeError::EmptyAmbient);
        };
        let t = first.as_ref().len();
        let mut bits = Vec::with_capacity(rows.len());
        for row in rows {
            let row = row.as_ref();
            if row.len() != t {
                return Err(CodeError::RaggedGenerators {
                    expected: t,
                    found: row.len(),
                });
            }
            bits.push(parse_bitstring(row)?);
        }
        canonicalize(&bits, t)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    /// Canonical generator rows (reduced row echelon form).
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|&g| bits_to_string(g, self.t))
            .collect()
    }

    /// True iff every codeword has weight divisible by 4.
    pub fn is_doubly_even(&self) -> bool {
        self.doubly_even
    }

    /// All 2^dim codewords, in subset-mask order of the canonical generators.
    pub fn codewords(&self) -> Vec<u64> {
        let d = self.dim();
        let mut words = Vec::with_capacity(1 << d);
        for mask in 0u64..(1 << d) {
            let mut w = 0;
            for (j, &g) in self.generators.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    w ^= g;
                }
            }
            words.push(w);
        }
        words
    }

    /// Reduce `word` against the canonical generators, zeroing every pivot
    /// coordinate. Two words reduce to the same value iff they lie in the
    /// same coset.
    pub fn reduce(&self, word: u64) -> u64 {
        let mut w = word;
        for (&g, &p) in self.generators.iter().zip(&self.pivots) {
            if w >> p & 1 == 1 {
                w ^= g;
            }
        }
        w
    }

    pub fn contains(&self, word: u64) -> bool {
        self.reduce(word) == 0
    }

    /// True iff the all-ones vector is a codeword. Quotient graphs of such
    /// codes are the non-generic ones: they admit switching-inequivalent
    /// odd dashings, and the 2-rank of their Laplacian drops below v/2.
    pub fn contains_all_ones(&self) -> bool {
        self.contains(ones_mask(self.t))
    }

    /// Lexicographically minimal element of the coset of `word`.
    pub fn coset_representative(&self, word: u64) -> u64 {
        self.codewords()
            .iter()
            .map(|&c| word ^ c)
            .min_by_key(|&w| lex_key(w, self.t))
            .expect("a code always contains the zero word")
    }

    /// All cosets, sorted by representative. Errors when the quotient would
    /// exceed `DEFAULT_MAX_VERTICES` vertices.
    pub fn cosets(&self) -> Result<Vec<Coset>, CodeError> {
        self.cosets_capped(DEFAULT_MAX_VERTICES)
    }

    pub fn cosets_capped(&self, cap: usize) -> Result<Vec<Coset>, CodeError> {
        let free_bits = self.t - self.dim();
        let needed = 1u128 << free_bits;
        if free_bits >= usize::BITS as usize || needed > cap as u128 {
            return Err(CodeError::TooLarge { needed, cap });
        }
        let free_positions: Vec<usize> =
            (0..self.t).filter(|i| !self.pivots.contains(i)).collect();
        let mut cosets = Vec::with_capacity(1 << free_bits);
        for idx in 0u64..(1 << free_bits) {
            let mut w = 0u64;
            for (j, &pos) in free_positions.iter().enumerate() {
                if idx >> j & 1 == 1 {
                    w |= 1 << pos;
                }
            }
            cosets.push(Coset {
                representative: self.coset_representative(w),
            });
        }
        cosets.sort_by_key(|c| lex_key(c.representative, self.t));
        Ok(cosets)
    }
}
