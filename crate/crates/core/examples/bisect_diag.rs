//! Diagnostic driver for the partition bisector: runs the configurations the
//! test suite exercises and reports pass/fail per seed. Set BISECT_TRACE=1 to
//! watch the pin walk.

use incw_core::algebra::scalar::ratio;
use incw_core::geometry::point::Point;
use incw_core::partition::build_partition;
use rand::{Rng, SeedableRng};

fn main() {
    let only: Option<String> = std::env::args().nth(1);

    let mut grid = Vec::new();
    for x in 0..6 {
        for y in 0..6 {
            grid.push(Point::from_i64(&[x, y]));
        }
    }
    for seed in 0..12u64 {
        if let Some(sel) = &only {
            if sel != &format!("g{seed}") {
                continue;
            }
        }
        match build_partition(&grid, 8, &ratio(1, 20), seed) {
            Ok(p) => eprintln!("grid6 r8 seed {seed}: ok deg {}", p.degree),
            Err(e) => eprintln!("grid6 r8 seed {seed}: FAIL {e}"),
        }
    }

    for (dim, seed) in [(2usize, 5u64), (3, 6)] {
        if let Some(sel) = &only {
            if sel != &format!("r{dim}") {
                continue;
            }
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let pts: Vec<Point> = (0..256)
            .map(|_| {
                let coords: Vec<_> = (0..dim)
                    .map(|_| ratio(rng.gen_range(-64..=64), rng.gen_range(1..=8)))
                    .collect();
                Point::new(coords)
            })
            .collect();
        match build_partition(&pts, 16, &ratio(1, 20), seed) {
            Ok(p) => eprintln!("rand256 d{dim} r16 seed {seed}: ok deg {}", p.degree),
            Err(e) => eprintln!("rand256 d{dim} r16 seed {seed}: FAIL {e}"),
        }
    }
}
