//! The scrambled xorshift family and SplitMix64.
//!
//! Every generator is an explicit state-transition function over a small
//! array of 64-bit words. The update rules and constants are the canonical
//! reference ones:
//!
//! | generator        | state   | shifts / rotations | scrambler                      |
//! |------------------|---------|--------------------|--------------------------------|
//! | xorshift1024*    | 16 × u64| 31, 11, 30         | `× 1181783497276652981`        |
//! | xorshift1024+    | 16 × u64| 31, 11, 30         | `s[p] + s0`                    |
//! | xorshift128+     | 2 × u64 | 23, 18, 5          | `s[1] + s0`                    |
//! | xorshift128+ (v8)| 2 × u64 | 23, 17, 26         | `s[1] + s0`                    |
//! | xoroshiro128+    | 2 × u64 | 55, 14, 36         | `s0 + s1`                      |
//! | SplitMix64       | 1 × u64 | 30, 27, 31         | two multiply-xorshift rounds   |
//!
//! All five scramblers leave bit 0 of the output a GF(2)-linear function of
//! the state, which is what the rest of the crate sets out to detect.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Increment of the SplitMix64 Weyl sequence.
pub const SPLITMIX_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// Multiplier of the xorshift1024* scrambler.
pub const XORSHIFT1024_STAR_MULTIPLIER: u64 = 1_181_783_497_276_652_981;

/// Shift triple `(left, right, right)` of the xorshift128+ update.
pub const XORSHIFT128_SHIFTS: (u32, u32, u32) = (23, 18, 5);

/// Shift triple used by the V8 JavaScript engine's xorshift128+.
pub const XORSHIFT128_V8_SHIFTS: (u32, u32, u32) = (23, 17, 26);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GeneratorKind {
    Xorshift1024Star,
    Xorshift1024Plus,
    Xorshift128Plus,
    Xorshift128PlusV8,
    Xoroshiro128Plus,
    SplitMix64,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 6] = [
        GeneratorKind::Xorshift1024Star,
        GeneratorKind::Xorshift1024Plus,
        GeneratorKind::Xorshift128Plus,
        GeneratorKind::Xorshift128PlusV8,
        GeneratorKind::Xoroshiro128Plus,
        GeneratorKind::SplitMix64,
    ];

    /// The five scrambled xorshift generators (everything but SplitMix64).
    pub const SCRAMBLED: [GeneratorKind; 5] = [
        GeneratorKind::Xorshift1024Star,
        GeneratorKind::Xorshift1024Plus,
        GeneratorKind::Xorshift128Plus,
        GeneratorKind::Xorshift128PlusV8,
        GeneratorKind::Xoroshiro128Plus,
    ];

    /// Number of 64-bit words of state.
    pub fn state_words(self) -> usize {
        match self {
            GeneratorKind::Xorshift1024Star | GeneratorKind::Xorshift1024Plus => 16,
            GeneratorKind::Xorshift128Plus | GeneratorKind::Xorshift128PlusV8 | GeneratorKind::Xoroshiro128Plus => 2,
            GeneratorKind::SplitMix64 => 1,
        }
    }

    pub fn state_bits(self) -> usize {
        self.state_words() * 64
    }

    /// True for the xorshift-derived kinds, whose all-zero state is a fixed point.
    pub fn is_xorshift(self) -> bool {
        self != GeneratorKind::SplitMix64
    }

    /// Short machine name, accepted back by [`FromStr`].
    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::Xorshift1024Star => "xorshift1024*",
            GeneratorKind::Xorshift1024Plus => "xorshift1024+",
            GeneratorKind::Xorshift128Plus => "xorshift128+",
            GeneratorKind::Xorshift128PlusV8 => "xorshift128+v8",
            GeneratorKind::Xoroshiro128Plus => "xoroshiro128+",
            GeneratorKind::SplitMix64 => "splitmix64",
        }
    }

    /// Label used in rendered tables.
    pub fn display_name(self) -> &'static str {
        match self {
            GeneratorKind::Xorshift128PlusV8 => "xorshift128+ (v8)",
            other => other.name(),
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm: String =
            s.trim().to_ascii_lowercase().chars().filter(|c| !matches!(c, ' ' | '(' | ')' | '-' | '_')).collect();
        let kind = match norm.as_str() {
            "xorshift1024*" | "xorshift1024star" => GeneratorKind::Xorshift1024Star,
            "xorshift1024+" | "xorshift1024plus" => GeneratorKind::Xorshift1024Plus,
            "xorshift128+" | "xorshift128plus" => GeneratorKind::Xorshift128Plus,
            "xorshift128+v8" | "xorshift128plusv8" | "v8" => GeneratorKind::Xorshift128PlusV8,
            "xoroshiro128+" | "xoroshiro128plus" | "xoroshiro128" => GeneratorKind::Xoroshiro128Plus,
            "splitmix64" | "splitmix" => GeneratorKind::SplitMix64,
            _ => return Err(Error::UnknownGenerator(s.to_string())),
        };
        Ok(kind)
    }
}

/// The evolving state of one generator instance.
///
/// A plain value: clone it to fork an independent copy of the stream.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorState {
    kind: GeneratorKind,
    words: [u64; 16],
    /// Rotation cursor of the 1024-bit generators; always 0 otherwise.
    index: usize,
}

impl GeneratorState {
    /// Builds a state from explicit words. The slice length must match the
    /// kind, and xorshift kinds reject the all-zero state.
    pub fn from_words(kind: GeneratorKind, words: &[u64]) -> Result<Self, Error> {
        Self::from_words_at(kind, words, 0)
    }

    /// Like [`GeneratorState::from_words`] with an explicit rotation cursor
    /// (only meaningful for the 1024-bit kinds).
    pub fn from_words_at(kind: GeneratorKind, words: &[u64], index: usize) -> Result<Self, Error> {
        let n = kind.state_words();
        if words.len() != n {
            return Err(Error::InvalidParams(format!("{kind} takes {n} state words, got {}", words.len())));
        }
        if index >= 16 || (n != 16 && index != 0) {
            return Err(Error::InvalidParams(format!("state index {index} out of range for {kind}")));
        }
        if kind.is_xorshift() && words.iter().all(|&w| w == 0) {
            return Err(Error::AllZeroState(kind));
        }
        let mut buf = [0u64; 16];
        buf[..n].copy_from_slice(words);
        Ok(GeneratorState { kind, words: buf, index })
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    pub fn words(&self) -> &[u64] {
        &self.words[..self.kind.state_words()]
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// Advances the state and returns the next 64-bit output.
    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        match self.kind {
            GeneratorKind::Xorshift1024Star => xorshift1024star_next(&mut self.words, &mut self.index),
            GeneratorKind::Xorshift1024Plus => xorshift1024plus_next(&mut self.words, &mut self.index),
            GeneratorKind::Xorshift128Plus => xorshift128plus_step(&mut self.words, XORSHIFT128_SHIFTS),
            GeneratorKind::Xorshift128PlusV8 => xorshift128plus_step(&mut self.words, XORSHIFT128_V8_SHIFTS),
            GeneratorKind::Xoroshiro128Plus => xoroshiro128plus_next(&mut self.words),
            GeneratorKind::SplitMix64 => splitmix_next(&mut self.words[0]),
        }
    }
}

/// Expands a 64-bit seed into a full generator state.
///
/// A SplitMix64 instance seeded with `seed` fills the state words in call
/// order (2 calls for the 128-bit kinds, 16 for the 1024-bit kinds). SplitMix64
/// itself takes the seed directly.
pub fn seed_generator(kind: GeneratorKind, seed: u64) -> Result<GeneratorState, Error> {
    if kind == GeneratorKind::SplitMix64 {
        return GeneratorState::from_words(kind, &[seed]);
    }
    let mut sm = seed;
    let words: Vec<u64> = (0..kind.state_words()).map(|_| splitmix_next(&mut sm)).collect();
    GeneratorState::from_words(kind, &words)
}

/// One SplitMix64 step on a bare state word.
#[inline]
pub fn splitmix_next(state: &mut u64) -> u64 {
    *state = state.wrapping_add(SPLITMIX_GAMMA);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Shared xorshift1024 recurrence; returns `(s0, s[p'])` after the update.
#[inline]
fn xorshift1024_update(s: &mut [u64; 16], p: &mut usize) -> (u64, u64) {
    let s0 = s[*p];
    *p = (*p + 1) & 15;
    let mut s1 = s[*p];
    s1 ^= s1 << 31;
    s[*p] = s1 ^ s0 ^ (s1 >> 11) ^ (s0 >> 30);
    (s0, s[*p])
}

#[inline]
fn xorshift1024star_next(s: &mut [u64; 16], p: &mut usize) -> u64 {
    let (_, w) = xorshift1024_update(s, p);
    w.wrapping_mul(XORSHIFT1024_STAR_MULTIPLIER)
}

#[inline]
fn xorshift1024plus_next(s: &mut [u64; 16], p: &mut usize) -> u64 {
    let (s0, w) = xorshift1024_update(s, p);
    w.wrapping_add(s0)
}

#[inline]
fn xorshift128plus_step(s: &mut [u64; 16], (a, b, c): (u32, u32, u32)) -> u64 {
    let mut s1 = s[0];
    let s0 = s[1];
    s[0] = s0;
    s1 ^= s1 << a;
    s[1] = s1 ^ s0 ^ (s1 >> b) ^ (s0 >> c);
    s[1].wrapping_add(s0)
}

#[inline]
fn xoroshiro128plus_next(s: &mut [u64; 16]) -> u64 {
    let s0 = s[0];
    let mut s1 = s[1];
    let result = s0.wrapping_add(s1);
    s1 ^= s0;
    s[0] = s0.rotate_left(55) ^ s1 ^ (s1 << 14);
    s[1] = s1.rotate_left(36);
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    // Vectors below were produced by compiling the reference C listings
    // (splitmix64.c, xorshift1024star.c, xorshift1024plus.c,
    // xorshift128plus.c with both shift triples, xoroshiro128plus.c) and
    // recording their first ten outputs.

    const SPLITMIX_SEED0: [u64; 16] = [
        0xe220a8397b1dcdaf,
        0x6e789e6aa1b965f4,
        0x06c45d188009454f,
        0xf88bb8a8724c81ec,
        0x1b39896a51a8749b,
        0x53cb9f0c747ea2ea,
        0x2c829abe1f4532e1,
        0xc584133ac916ab3c,
        0x3ee5789041c98ac3,
        0xf3b8488c368cb0a6,
        0x657eecdd3cb13d09,
        0xc2d326e0055bdef6,
        0x8621a03fe0bbdb7b,
        0x8e1f7555983aa92f,
        0xb54e0f1600cc4d19,
        0x84bb3f97971d80ab,
    ];

    fn run(state: &mut GeneratorState, n: usize) -> Vec<u64> {
        (0..n).map(|_| state.next_u64()).collect()
    }

    #[test]
    fn splitmix_matches_reference() {
        let mut st = seed_generator(GeneratorKind::SplitMix64, 0).unwrap();
        assert_eq!(run(&mut st, 16), SPLITMIX_SEED0);
    }

    #[test]
    fn splitmix_state_advances_by_gamma() {
        for seed in [0u64, 1, 42, u64::MAX, 0x0123_4567_89ab_cdef] {
            let mut s = seed;
            splitmix_next(&mut s);
            assert_eq!(s, seed.wrapping_add(SPLITMIX_GAMMA));
        }
    }

    #[test]
    fn xorshift128plus_one_two() {
        let mut st = GeneratorState::from_words(GeneratorKind::Xorshift128Plus, &[1, 2]).unwrap();
        assert_eq!(st.next_u64(), 0x800025);
        assert_eq!(st.words(), &[2, 0x800023]);
        assert_eq!(
            run(&mut st, 9),
            [
                0x0000000002040083,
                0x00004000020c2460,
                0x0000c00002108d21,
                0x000100120190f76b,
                0x00014038101615a5,
                0x09010058349db3c4,
                0x2340c0465e10719b,
                0x24c1084843d5b4a8,
                0x2509508824df9895,
            ]
        );
        assert_eq!(st.words(), &[0x0a8088340a556f76, 0x1a88c8541a8a291f]);
    }

    #[test]
    fn xorshift128plus_zero_one() {
        let mut st = GeneratorState::from_words(GeneratorKind::Xorshift128Plus, &[0, 1]).unwrap();
        assert_eq!(
            run(&mut st, 10),
            [
                0x0000000000000002,
                0x0000000000800021,
                0x0000000000840020,
                0x0000400000882400,
                0x0000800000882921,
                0x000080120008864a,
                0x0000402210048549,
                0x0900401224902429,
                0x0a40801418c04532,
                0x0a8088140a352536,
            ]
        );
    }

    #[test]
    fn xorshift128plus_v8_one_two() {
        let mut st = GeneratorState::from_words(GeneratorKind::Xorshift128PlusV8, &[1, 2]).unwrap();
        assert_eq!(
            run(&mut st, 10),
            [
                0x0000000000800045,
                0x0000000002000104,
                0x00004000020010c3,
                0x0000c00002103045,
                0x0001000801c450c4,
                0x000148200440334b,
                0x040118200d8e16da,
                0x0c02e8191918b86e,
                0x1008a12455ca592a,
                0x1089632414ba78d4,
            ]
        );
        assert_eq!(st.words(), &[0x080609134633b4cc, 0x08835a10ce86c408]);
    }

    #[test]
    fn xoroshiro128plus_one_two() {
        let mut st = GeneratorState::from_words(GeneratorKind::Xoroshiro128Plus, &[1, 2]).unwrap();
        assert_eq!(st.next_u64(), 3);
        assert_eq!(
            run(&mut st, 9),
            [
                0x008000300000c003,
                0x0118406038000363,
                0xa080fe5030c4c366,
                0x3ae0e84f181c8404,
                0x0390283917940944,
                0x98dcc1f06360888c,
                0x7db94a025d95c80f,
                0x775088046d70b290,
                0x412422d94084790d,
            ]
        );
        assert_eq!(st.words(), &[0x699bbf6da62c093d, 0xf7b86c13d139d16b]);
    }

    fn patterned_1024(kind: GeneratorKind) -> GeneratorState {
        let words: Vec<u64> = (1..=16u64).map(|i| i * 0x0101_0101_0101_0101).collect();
        GeneratorState::from_words(kind, &words).unwrap()
    }

    #[test]
    fn xorshift1024star_patterned() {
        let mut st = patterned_1024(GeneratorKind::Xorshift1024Star);
        assert_eq!(
            run(&mut st, 10),
            [
                0xd5d9b6de84579033,
                0x02e244a0414ac451,
                0xd6ef0d83c2a20c27,
                0x174a9cf2d54f566b,
                0x975683fff66d43c1,
                0x0ff34b1c39664448,
                0x5afca9f800221e7f,
                0x6dbe31b6fb0c64e3,
                0xd08c286aece3c4d8,
                0x02e244a0414ac451,
            ]
        );
        assert_eq!(st.index(), 10);
    }

    #[test]
    fn xorshift1024plus_patterned() {
        let mut st = patterned_1024(GeneratorKind::Xorshift1024Plus);
        assert_eq!(
            run(&mut st, 10),
            [
                0x0303636368684848,
                0x8293131323a4f4f4,
                0x0727272536f99998,
                0x879777758fd3838a,
                0x0505a5a5ccccecfc,
                0x8495555567e57585,
                0x0d2dedefec2c0c0b,
                0x8d9e3e406d33231a,
                0x0f10f0f1100fafaf,
                0x8ea0a0a09b162625,
            ]
        );
    }

    #[test]
    fn seeded_vectors() {
        let mut st = seed_generator(GeneratorKind::Xorshift128Plus, 1).unwrap();
        assert_eq!(
            run(&mut st, 10),
            [
                0x9b3df27e919f6a0c,
                0x913c0b97eddc4551,
                0xb8745298b438e33c,
                0xedaa33964d510ca2,
                0xea5c65419ff1eca3,
                0x364c9e32a6644d38,
                0x293195a892628d7f,
                0x89297e75d1bea2ec,
                0xb4168f683cb5dfcb,
                0x51b84fc06243c781,
            ]
        );
        let mut st = seed_generator(GeneratorKind::Xorshift1024Star, 1).unwrap();
        assert_eq!(
            run(&mut st, 10),
            [
                0xe38934c8e30ce11d,
                0xd2354a43b0381a90,
                0xa27d38b29846dc49,
                0xd8edb9e7c83ddcc8,
                0xc113ef12f13d9ea1,
                0xd72c208479e059c5,
                0x8eb560b4f9adb622,
                0x9861741cba3f106d,
                0xa691329936923e1c,
                0xfbc5979cb2141d74,
            ]
        );
    }

    #[test]
    fn seeding_fills_in_call_order() {
        let st = seed_generator(GeneratorKind::Xorshift128Plus, 0).unwrap();
        assert_eq!(st.words(), &SPLITMIX_SEED0[..2]);
        let st = seed_generator(GeneratorKind::Xorshift1024Star, 0).unwrap();
        assert_eq!(st.words(), &SPLITMIX_SEED0[..]);
        assert_eq!(st.index(), 0);
        let st = seed_generator(GeneratorKind::SplitMix64, 42).unwrap();
        assert_eq!(st.words(), &[42]);
    }

    #[test]
    fn all_zero_state_rejected() {
        for kind in GeneratorKind::SCRAMBLED {
            let zeros = vec![0; kind.state_words()];
            assert!(matches!(
                GeneratorState::from_words(kind, &zeros),
                Err(Error::AllZeroState(k)) if k == kind
            ));
        }
        assert!(GeneratorState::from_words(GeneratorKind::SplitMix64, &[0]).is_ok());
    }

    #[test]
    fn wrong_word_count_rejected() {
        assert!(GeneratorState::from_words(GeneratorKind::Xorshift128Plus, &[1]).is_err());
        assert!(GeneratorState::from_words_at(GeneratorKind::Xorshift128Plus, &[1, 2], 3).is_err());
    }

    #[test]
    fn star_and_plus_share_recurrence() {
        let mut a = patterned_1024(GeneratorKind::Xorshift1024Star);
        let mut b = patterned_1024(GeneratorKind::Xorshift1024Plus);
        for _ in 0..100 {
            a.next_u64();
            b.next_u64();
            assert_eq!(a.words(), b.words());
            assert_eq!(a.index(), b.index());
        }
    }

    #[test]
    fn index_period_sixteen() {
        let mut st = seed_generator(GeneratorKind::Xorshift1024Plus, 7).unwrap();
        for i in 1..=64 {
            st.next_u64();
            assert_eq!(st.index(), i % 16);
        }
    }

    #[test]
    fn bit0_is_carry_free() {
        for kind in GeneratorKind::SCRAMBLED {
            let mut st = seed_generator(kind, 99).unwrap();
            for _ in 0..1000 {
                let before = st.clone();
                let out = st.next_u64();
                let expected = match kind {
                    GeneratorKind::Xorshift1024Star => st.words()[st.index()] & 1,
                    GeneratorKind::Xorshift1024Plus => (st.words()[st.index()] ^ before.words()[before.index()]) & 1,
                    GeneratorKind::Xorshift128Plus | GeneratorKind::Xorshift128PlusV8 => {
                        (st.words()[1] ^ before.words()[1]) & 1
                    }
                    GeneratorKind::Xoroshiro128Plus => (before.words()[0] ^ before.words()[1]) & 1,
                    GeneratorKind::SplitMix64 => unreachable!(),
                };
                assert_eq!(out & 1, expected, "{kind}");
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for kind in GeneratorKind::ALL {
            assert_eq!(kind.name().parse::<GeneratorKind>().unwrap(), kind);
            assert_eq!(kind.display_name().parse::<GeneratorKind>().unwrap(), kind);
        }
        assert!("nosuch".parse::<GeneratorKind>().is_err());
    }
}
