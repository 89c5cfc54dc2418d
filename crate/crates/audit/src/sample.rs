//! Seeded operand generation.
//!
//! Every sample owns its generator, seeded from `(seed, law, dim, index)`, so
//! the stream a sample sees never depends on how samples are scheduled.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};

use hyperspace::convert::{from_polar, to_polar};
use hyperspace::space3::{self, to_polar3, Space3};
use hyperspace::{Cartesian, Orientation, Polar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Domain, Law};

const MIN_MODULUS: f64 = 1e-8;
const BOUNDARY_GAP: f64 = 1e-8;

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// FNV-1a, stable across platforms and releases
fn law_hash(law: Law) -> u64 {
    law.id().bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

pub fn sample_seed(seed: u64, law: Law, dim: usize, index: usize) -> u64 {
    let mut h = splitmix(seed);
    h = splitmix(h ^ law_hash(law));
    h = splitmix(h ^ dim as u64);
    splitmix(h ^ index as u64)
}

pub struct Sampler {
    rng: ChaCha8Rng,
    domain: Domain,
    orientation: Orientation,
    pub resamples: usize,
}

impl Sampler {
    pub fn new(seed: u64, domain: Domain, orientation: Orientation) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            domain,
            orientation,
            resamples: 0,
        }
    }

    fn magnitude(&mut self) -> f64 {
        10f64.powf(self.rng.random_range(-2.0..2.0))
    }

    pub fn int(&mut self, lo: i32, hi: i32) -> i32 {
        self.rng.random_range(lo..=hi)
    }

    fn near_boundary(&self, p: &Polar) -> bool {
        let first = self.orientation.axis_at(0, p.dim());
        p.angles().iter().enumerate().any(|(i, &a)| {
            if i + 1 == first {
                a < BOUNDARY_GAP || TAU - a < BOUNDARY_GAP
            } else {
                FRAC_PI_2 - a.abs() < BOUNDARY_GAP
            }
        })
    }

    /// A number of dimension `dim` clear of the modulus floor and of every
    /// canonical-range boundary.
    pub fn cartesian(&mut self, dim: usize) -> Cartesian {
        loop {
            let s = match self.domain {
                Domain::Unrestricted => {
                    let m = self.magnitude();
                    let v = (0..dim).map(|_| self.rng.random_range(-1.0..=1.0) * m).collect();
                    Cartesian::new(v).expect("finite coefficients")
                }
                Domain::PositiveRestricted => {
                    let r = self.magnitude();
                    let angles = (1..dim)
                        .map(|_| self.rng.random_range(-FRAC_PI_4..FRAC_PI_4))
                        .collect();
                    from_polar(&Polar::new(r, angles, self.orientation).expect("valid polar"))
                }
            };
            if s.modulus() >= MIN_MODULUS && !self.near_boundary(&to_polar(&s, self.orientation)) {
                return s;
            }
            self.resamples += 1;
        }
    }

    pub fn space3(&mut self) -> Space3<f64> {
        loop {
            let s = match self.domain {
                Domain::Unrestricted => {
                    let m = self.magnitude();
                    let mut c = || self.rng.random_range(-1.0..=1.0) * m;
                    Space3::new(c(), c(), c()).expect("finite coefficients")
                }
                Domain::PositiveRestricted => {
                    let r = self.magnitude();
                    let theta = self.rng.random_range(0.0..FRAC_PI_4);
                    let phi = self.rng.random_range(-FRAC_PI_4..FRAC_PI_4);
                    space3::ExpForm3::new(r, theta, phi).expect("valid polar").to_cartesian()
                }
            };
            let p = to_polar3(&s);
            let clear = p.modulus() >= MIN_MODULUS
                && p.theta() >= BOUNDARY_GAP
                && PI - p.theta() >= BOUNDARY_GAP
                && p.phi() >= BOUNDARY_GAP
                && TAU - p.phi() >= BOUNDARY_GAP;
            if clear {
                return s;
            }
            self.resamples += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_separate_every_coordinate() {
        let base = sample_seed(42, Law::Distributive, 3, 0);
        assert_ne!(base, sample_seed(43, Law::Distributive, 3, 0));
        assert_ne!(base, sample_seed(42, Law::Demoivre, 3, 0));
        assert_ne!(base, sample_seed(42, Law::Distributive, 4, 0));
        assert_ne!(base, sample_seed(42, Law::Distributive, 3, 1));
        assert_eq!(base, sample_seed(42, Law::Distributive, 3, 0));
    }

    #[test]
    fn positive_domain_has_positive_real_part() {
        for o in [Orientation::Anticlockwise, Orientation::Clockwise] {
            let mut s = Sampler::new(7, Domain::PositiveRestricted, o);
            for _ in 0..200 {
                let c = s.cartesian(5);
                assert!(c.coeffs()[0] > 0.0);
                let p = s.space3();
                assert!(p.a > 0.0);
            }
        }
    }

    #[test]
    fn unrestricted_magnitudes_span_four_decades() {
        let mut s = Sampler::new(1, Domain::Unrestricted, Orientation::Anticlockwise);
        let mods: Vec<f64> = (0..2000).map(|_| s.cartesian(3).modulus()).collect();
        assert!(mods.iter().any(|&m| m < 0.05));
        assert!(mods.iter().any(|&m| m > 20.0));
    }
}
