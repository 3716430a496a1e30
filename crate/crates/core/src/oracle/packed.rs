//! Words of length `n <= 32` packed two bits per symbol into a `u64`, position
//! 0 in the most significant pair, so that integer order on packed words is
//! lexicographic order on symbol sequences.

use super::CyclicWord;

pub const MAX_PACKED_LEN: usize = 32;

const LOW_BITS: u64 = 0x5555_5555_5555_5555;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Packed {
    n: u32,
    mask: u64,
}

impl Packed {
    pub(crate) fn new(n: usize) -> Self {
        assert!((1..=MAX_PACKED_LEN).contains(&n), "packed length {n}");
        let bits = 2 * n as u32;
        let mask = if bits == 64 { u64::MAX } else { (1u64 << bits) - 1 };
        Self { n: n as u32, mask }
    }

    pub(crate) fn len(self) -> usize {
        self.n as usize
    }

    #[cfg(test)]
    pub(crate) fn pack(self, symbols: &[u8]) -> u64 {
        symbols.iter().fold(0, |acc, &s| (acc << 2) | s as u64)
    }

    pub(crate) fn unpack(self, w: u64, alphabet: u8) -> CyclicWord {
        let n = self.len();
        let symbols = (0..n).map(|i| ((w >> (2 * (n - 1 - i))) & 3) as u8).collect();
        CyclicWord::new(alphabet, symbols).expect("packed symbols are in range")
    }

    /// `result[i] = w[(i + t) mod n]`.
    #[inline]
    pub(crate) fn rotate(self, w: u64, t: u32) -> u64 {
        if t == 0 {
            return w;
        }
        let s = 2 * t;
        ((w << s) | (w >> (2 * self.n - s))) & self.mask
    }

    /// `result[i] = w[n - 1 - i]`.
    #[inline]
    pub(crate) fn reverse(self, w: u64) -> u64 {
        let r = w.reverse_bits();
        // reverse_bits also swapped the two bits inside each symbol
        let r = ((r >> 1) & LOW_BITS) | ((r & LOW_BITS) << 1);
        r >> (64 - 2 * self.n)
    }

    /// Number of nonzero symbols.
    #[inline]
    pub(crate) fn weight(self, w: u64) -> u32 {
        ((w | (w >> 1)) & LOW_BITS & self.mask).count_ones()
    }

    #[inline]
    pub(crate) fn canonical(self, w: u64) -> u64 {
        let r = self.reverse(w);
        let mut best = w.min(r);
        for t in 1..self.n {
            best = best.min(self.rotate(w, t)).min(self.rotate(r, t));
        }
        best
    }

    /// Whether no dihedral image of `w` is smaller; exits at the first
    /// smaller image.
    #[inline]
    pub(crate) fn is_canonical(self, w: u64) -> bool {
        let r = self.reverse(w);
        if r < w {
            return false;
        }
        for t in 1..self.n {
            if self.rotate(w, t) < w || self.rotate(r, t) < w {
                return false;
            }
        }
        true
    }

    /// Whether some rotation by `0 < t < n` fixes `w`.
    #[inline]
    pub(crate) fn is_rotsym(self, w: u64, prime_factors: &[u32]) -> bool {
        prime_factors.iter().any(|&p| self.rotate(w, self.n / p) == w)
    }

    /// Whether some reflection fixes `w`.
    #[inline]
    pub(crate) fn is_reflective(self, w: u64) -> bool {
        let r = self.reverse(w);
        (0..self.n).any(|t| self.rotate(r, t) == w)
    }

    /// Shortest circular run of zeros between consecutive nonzero symbols;
    /// `None` for the zero word.
    #[inline]
    pub(crate) fn min_gap(self, w: u64) -> Option<u32> {
        let n = self.n;
        let mut first = None;
        let mut prev = 0;
        let mut least = u32::MAX;
        for i in 0..n {
            if (w >> (2 * (n - 1 - i))) & 3 != 0 {
                match first {
                    None => first = Some(i),
                    Some(_) => least = least.min(i - prev - 1),
                }
                prev = i;
            }
        }
        let first = first?;
        Some(least.min(first + n - prev - 1))
    }

    /// The word repeating the length-`len` seed `n / len` times.
    pub(crate) fn repeat(self, seed: u64, len: u32) -> u64 {
        let mut w = 0;
        for _ in 0..self.n / len {
            w = (w << (2 * len)) | seed;
        }
        w
    }
}

/// Packs the base-`alphabet` digits of `index` (most significant first) into
/// a word of length `n`.
#[inline]
pub(crate) fn from_index(mut index: u64, n: usize, alphabet: u8) -> u64 {
    if alphabet == 2 {
        // spread bit i of the index to bit 2i
        let mut w = 0;
        for i in 0..n {
            w |= ((index >> i) & 1) << (2 * i);
        }
        return w;
    }
    let a = alphabet as u64;
    let mut w = 0;
    for i in 0..n {
        w |= (index % a) << (2 * i);
        index /= a;
    }
    w
}
