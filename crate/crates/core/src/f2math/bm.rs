//! Linear complexity via Berlekamp–Massey over GF(2), on packed bit words.

/// A bit sequence packed 64 bits per word, bit `i` at `words[i / 64] >> (i % 64)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BitSeq {
    words: Vec<u64>,
    len: usize,
}

impl BitSeq {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        BitSeq { words: Vec::with_capacity(bits.div_ceil(64)), len: 0 }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut seq = BitSeq::with_capacity(bits.len());
        bits.iter().for_each(|&b| seq.push(b));
        seq
    }

    /// Takes the first `len` bits of `words`; bits past `len` are cleared.
    pub fn from_words(mut words: Vec<u64>, len: usize) -> Self {
        assert!(words.len() * 64 >= len, "not enough words for {len} bits");
        words.truncate(len.div_ceil(64));
        if !len.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (len % 64)) - 1;
            }
        }
        BitSeq { words, len }
    }

    pub fn push(&mut self, bit: bool) {
        if self.len.is_multiple_of(64) {
            self.words.push(0);
        }
        if bit {
            self.words[self.len / 64] |= 1 << (self.len % 64);
        }
        self.len += 1;
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

/// Result of a linear-complexity computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComplexityProfile {
    /// Number of bits examined.
    pub n: usize,
    /// Length of the shortest LFSR generating them, in `0..=n`.
    pub complexity: usize,
}

/// Linear complexity of a whole sequence.
///
/// The all-zero sequence has complexity 0; `1, 0, 0, ...` has complexity 1.
pub fn berlekamp_massey(bits: &BitSeq) -> ComplexityProfile {
    let mut ws = BerlekampMassey::default();
    ComplexityProfile { n: bits.len(), complexity: ws.complexity(bits.words(), bits.len()) }
}

/// Reusable Berlekamp–Massey workspace; repeated calls reuse its buffers.
#[derive(Clone, Debug, Default)]
pub struct BerlekampMassey {
    rev: Vec<u64>,
    c: Vec<u64>,
    b: Vec<u64>,
    t: Vec<u64>,
}

impl BerlekampMassey {
    /// Linear complexity of the first `n` bits of a packed sequence.
    pub fn complexity(&mut self, seq: &[u64], n: usize) -> usize {
        assert!(seq.len() * 64 >= n, "sequence shorter than {n} bits");
        if n == 0 {
            return 0;
        }
        let nw = n / 64 + 3;

        // The discrepancy at step i is the dot product of the connection
        // polynomial with s_i, s_{i-1}, ..., so keep the sequence reversed:
        // rev bit k = s_{n-1-k}. Then s_{i-j} sits at rev bit (n-1-i) + j.
        self.rev.clear();
        self.rev.resize(nw, 0);
        for i in 0..n {
            if (seq[i >> 6] >> (i & 63)) & 1 == 1 {
                let k = n - 1 - i;
                self.rev[k >> 6] |= 1 << (k & 63);
            }
        }
        for buf in [&mut self.c, &mut self.b, &mut self.t] {
            buf.clear();
            buf.resize(nw, 0);
        }
        self.c[0] = 1;
        self.b[0] = 1;

        let mut len = 0usize;
        // Step of the last length change, offset by one so it starts at "-1".
        let mut last_change_plus_one = 0usize;
        let mut c_deg = 0usize;
        let mut b_deg = 0usize;

        for i in 0..n {
            let off = n - 1 - i;
            let mut acc = 0u64;
            for w in 0..=c_deg / 64 {
                acc ^= self.c[w] & window(&self.rev, off + 64 * w);
            }
            if acc.count_ones() & 1 == 0 {
                continue;
            }
            let shift = i + 1 - last_change_plus_one;
            let grow = 2 * len <= i;
            if grow {
                let cw = c_deg / 64 + 1;
                self.t[..cw].copy_from_slice(&self.c[..cw]);
            }
            xor_shifted(&mut self.c, &self.b[..b_deg / 64 + 1], shift);
            let t_deg = c_deg;
            c_deg = c_deg.max(b_deg + shift);
            if grow {
                len = i + 1 - len;
                last_change_plus_one = i + 1;
                std::mem::swap(&mut self.b, &mut self.t);
                // Words of b past b_deg / 64 are stale but never read.
                b_deg = t_deg;
            }
        }
        len
    }
}

/// 64 bits of `v` starting at bit `pos`.
#[inline]
fn window(v: &[u64], pos: usize) -> u64 {
    let w = pos >> 6;
    let b = pos & 63;
    if b == 0 {
        v[w]
    } else {
        (v[w] >> b) | (v[w + 1] << (64 - b))
    }
}

/// `dst ^= src << shift` (bitwise, over packed words).
#[inline]
fn xor_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let ws = shift >> 6;
    let bs = shift & 63;
    if bs == 0 {
        for (d, &s) in dst[ws..].iter_mut().zip(src) {
            *d ^= s;
        }
    } else {
        for (w, &s) in src.iter().enumerate() {
            dst[w + ws] ^= s << bs;
            dst[w + ws + 1] ^= s >> (64 - bs);
        }
    }
}
