//! Regenerates the seeded module corpora under `tests/fixtures/`.
//!
//! ```text
//! cargo run -p katzvec-cli --example gen_corpus
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use katzvec::ring_spec::{ModuleSpec, RingDescriptor};

const SEED: u64 = 20_240_611;

fn poly_text(rng: &mut ChaCha8Rng, var: &str, max_degree: usize, scale: &str) -> String {
    let degree = rng.gen_range(0..=max_degree);
    let mut terms = Vec::new();
    for k in 0..=degree {
        let c: i64 = rng.gen_range(-3..=3);
        if c == 0 {
            continue;
        }
        terms.push(match k {
            0 => format!("{c}"),
            1 => format!("{c}*{var}"),
            _ => format!("{c}*{var}^{k}"),
        });
    }
    if terms.is_empty() {
        return "0".into();
    }
    let body = terms.join(" + ");
    if scale.is_empty() {
        body
    } else {
        format!("{scale}*({body})")
    }
}

/// Entries with poles only appear for `n ≤ 3`; at `n = 4` the iterated
/// connection matrices up to `G_6` get too large for a quick test.
fn qx_entry(rng: &mut ChaCha8Rng, n: usize) -> String {
    let mut kind = rng.gen_range(0..10);
    if n > 3 && (3..=4).contains(&kind) {
        kind = 5;
    }
    match kind {
        0..=2 => "0".into(),
        3 => {
            let num = poly_text(rng, "x", 2, "");
            let shift: i64 = rng.gen_range(-3..=3);
            match shift {
                0 => format!("({num})/x"),
                s if s < 0 => format!("({num})/(x + {})", -s),
                s => format!("({num})/(x - {s})"),
            }
        }
        4 => {
            let num = poly_text(rng, "x", 1, "");
            let c: i64 = rng.gen_range(1..=3);
            format!("({num})/(x^2 + {c})")
        }
        _ => poly_text(rng, "x", 3, ""),
    }
}

fn qx_corpus(rng: &mut ChaCha8Rng, count: usize) -> Vec<ModuleSpec> {
    (0..count)
        .map(|k| {
            let n = [1, 2, 2, 3, 3, 3, 4, 4][k % 8];
            let g1 = (0..n).map(|_| (0..n).map(|_| qx_entry(rng, n)).collect()).collect();
            ModuleSpec {
                ring: RingDescriptor::rational_function("x"),
                n,
                g1,
            }
        })
        .collect()
}

fn gauss_corpus(rng: &mut ChaCha8Rng, p: u64, count: usize) -> Vec<ModuleSpec> {
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=3);
            let r = *[0u32, 0, 1].choose(rng).unwrap();
            let g1 = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            if rng.gen_bool(0.25) {
                                return "0".to_string();
                            }
                            let k = rng.gen_range(0..=6);
                            poly_text(rng, "t", 2, &format!("{p}^{k}"))
                        })
                        .collect()
                })
                .collect();
            ModuleSpec {
                ring: RingDescriptor::gauss("t", p, r),
                n,
                g1,
            }
        })
        .collect()
}

/// A module and the `X`-coefficients `c_{0,0}, …, c_{0,n−1}` of a vector.
#[derive(Serialize)]
struct VectorCase {
    module: ModuleSpec,
    coeffs: Vec<Vec<String>>,
}

fn vector_corpus(rng: &mut ChaCha8Rng, count: usize) -> Vec<VectorCase> {
    qx_corpus(rng, count)
        .into_iter()
        .map(|module| {
            let n = module.n;
            let coeffs = (0..n).map(|_| (0..n).map(|_| qx_entry(rng, n)).collect()).collect();
            VectorCase { module, coeffs }
        })
        .collect()
}

fn write<T: Serialize>(dir: &Path, name: &str, value: &T) {
    let mut text = serde_json::to_string_pretty(value).unwrap();
    text.push('\n');
    fs::write(dir.join(name), text).unwrap();
}

fn main() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    fs::create_dir_all(&dir).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    write(&dir, "qx_corpus.json", &qx_corpus(&mut rng, 200));
    for p in [2u64, 3, 5] {
        write(&dir, &format!("gauss_p{p}.json"), &gauss_corpus(&mut rng, p, 50));
    }
    write(&dir, "vectors.json", &vector_corpus(&mut rng, 100));
}
