//! 32-bit test streams cut from 64-bit generator output.
//!
//! A [`LaneSpec`] picks which half of each 64-bit word is tested (or both,
//! interleaved most-significant half first) and whether each 32-bit word is
//! bit-reversed. Consumers that read individual bits take them
//! most-significant first, so with reversal the low-order generator bits
//! land in the positions a truncating test actually looks at.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::prng::GeneratorState;

/// Maps bit `i` to bit `31 - i`.
#[inline]
pub fn reverse32(w: u32) -> u32 {
    w.reverse_bits()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LaneSelector {
    Interleave,
    Low32,
    High32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LaneSpec {
    pub selector: LaneSelector,
    pub reversed: bool,
}

impl LaneSpec {
    pub const fn new(selector: LaneSelector, reversed: bool) -> Self {
        LaneSpec { selector, reversed }
    }

    /// All six lanes, unreversed before reversed for each selector.
    pub const ALL: [LaneSpec; 6] = [
        LaneSpec::new(LaneSelector::Interleave, false),
        LaneSpec::new(LaneSelector::Interleave, true),
        LaneSpec::new(LaneSelector::Low32, false),
        LaneSpec::new(LaneSelector::Low32, true),
        LaneSpec::new(LaneSelector::High32, false),
        LaneSpec::new(LaneSelector::High32, true),
    ];

    pub const LOW32_REVERSED: LaneSpec = LaneSpec::new(LaneSelector::Low32, true);
    pub const INTERLEAVE: LaneSpec = LaneSpec::new(LaneSelector::Interleave, false);

    pub fn name(self) -> &'static str {
        match (self.selector, self.reversed) {
            (LaneSelector::Interleave, false) => "interleave",
            (LaneSelector::Interleave, true) => "interleave-rev",
            (LaneSelector::Low32, false) => "low32",
            (LaneSelector::Low32, true) => "low32-rev",
            (LaneSelector::High32, false) => "high32",
            (LaneSelector::High32, true) => "high32-rev",
        }
    }
}

impl fmt::Display for LaneSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LaneSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        let (base, reversed) = ["-reversed", "-rev", "+rev", "_rev", ":rev"]
            .iter()
            .find_map(|suffix| lower.strip_suffix(suffix).map(|b| (b.to_string(), true)))
            .unwrap_or((lower.clone(), false));
        let selector = match base.as_str() {
            "interleave" | "interleaved" => LaneSelector::Interleave,
            "low32" | "low" | "lsb32" => LaneSelector::Low32,
            "high32" | "high" | "msb32" => LaneSelector::High32,
            _ => return Err(Error::UnknownLane(s.to_string())),
        };
        Ok(LaneSpec { selector, reversed })
    }
}

/// A pull-based supplier of 32-bit words.
///
/// `None` means the stream has ended; generator-backed sources never end.
pub trait BitSource {
    fn next_word(&mut self) -> Option<u32>;

    /// The `s` most significant bits of the next word, `1 <= s <= 32`.
    #[inline]
    fn take_bits(&mut self, s: u32) -> Option<u32> {
        debug_assert!((1..=32).contains(&s));
        self.next_word().map(|w| (u64::from(w) >> (32 - s)) as u32)
    }
}

impl<S: BitSource + ?Sized> BitSource for &mut S {
    #[inline]
    fn next_word(&mut self) -> Option<u32> {
        (**self).next_word()
    }
}

/// A generator viewed through a lane.
#[derive(Clone, Debug)]
pub struct LaneSource {
    generator: GeneratorState,
    lane: LaneSpec,
    pending: Option<u32>,
}

impl LaneSource {
    pub fn new(generator: GeneratorState, lane: LaneSpec) -> Self {
        LaneSource { generator, lane, pending: None }
    }

    pub fn lane(&self) -> LaneSpec {
        self.lane
    }

    pub fn generator(&self) -> &GeneratorState {
        &self.generator
    }

    /// Next lane word; never ends.
    #[inline]
    pub fn lane_next(&mut self) -> u32 {
        let w = match self.lane.selector {
            LaneSelector::Low32 => self.generator.next_u64() as u32,
            LaneSelector::High32 => (self.generator.next_u64() >> 32) as u32,
            LaneSelector::Interleave => match self.pending.take() {
                Some(low) => low,
                None => {
                    let x = self.generator.next_u64();
                    self.pending = Some(x as u32);
                    (x >> 32) as u32
                }
            },
        };
        if self.lane.reversed {
            reverse32(w)
        } else {
            w
        }
    }
}

impl BitSource for LaneSource {
    #[inline]
    fn next_word(&mut self) -> Option<u32> {
        Some(self.lane_next())
    }
}

/// Repeats one word forever.
#[derive(Clone, Copy, Debug)]
pub struct ConstantSource(pub u32);

impl BitSource for ConstantSource {
    fn next_word(&mut self) -> Option<u32> {
        Some(self.0)
    }
}

/// A finite list of words.
#[derive(Clone, Debug)]
pub struct SliceSource<'a> {
    words: &'a [u32],
    pos: usize,
}

impl<'a> SliceSource<'a> {
    pub fn new(words: &'a [u32]) -> Self {
        SliceSource { words, pos: 0 }
    }
}

impl BitSource for SliceSource<'_> {
    fn next_word(&mut self) -> Option<u32> {
        let w = self.words.get(self.pos).copied();
        self.pos += 1;
        w
    }
}

/// Any closure yielding words.
pub struct FnSource<F>(pub F);

impl<F: FnMut() -> Option<u32>> BitSource for FnSource<F> {
    fn next_word(&mut self) -> Option<u32> {
        (self.0)()
    }
}

/// Bit-granular reader over the top `s` bits of each word of a source.
///
/// Bits come out most significant first. Leftover bits of a chunk carry
/// over to the next read, so block boundaries need not align with words.
pub struct BitReader<'a, S: BitSource + ?Sized> {
    src: &'a mut S,
    s: u32,
    chunk: u32,
    left: u32,
    words_consumed: u64,
}

impl<'a, S: BitSource + ?Sized> BitReader<'a, S> {
    pub fn new(src: &'a mut S, s: u32) -> Result<Self, Error> {
        if !(1..=32).contains(&s) {
            return Err(Error::InvalidParams(format!("bits per word s={s} must lie in 1..=32")));
        }
        Ok(BitReader { src, s, chunk: 0, left: 0, words_consumed: 0 })
    }

    pub fn words_consumed(&self) -> u64 {
        self.words_consumed
    }

    #[inline]
    pub fn next_bit(&mut self) -> Result<bool, Error> {
        if self.left == 0 {
            self.chunk =
                self.src.take_bits(self.s).ok_or(Error::InsufficientStream { consumed: self.words_consumed })?;
            self.words_consumed += 1;
            self.left = self.s;
        }
        self.left -= 1;
        Ok((self.chunk >> self.left) & 1 == 1)
    }

    /// Reads `nbits` bits into `out`, packed little-endian (bit `j` of the
    /// read lands at `out[j / 64] >> (j % 64)`). `out` is cleared first.
    pub fn read_packed(&mut self, out: &mut [u64], nbits: usize) -> Result<(), Error> {
        debug_assert!(out.len() * 64 >= nbits);
        out.iter_mut().for_each(|w| *w = 0);
        for j in 0..nbits {
            if self.next_bit()? {
                out[j >> 6] |= 1u64 << (j & 63);
            }
        }
        Ok(())
    }
}
