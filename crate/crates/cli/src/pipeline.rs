//! Character-table computation with optional parallelism over class
//! matrices.

use codeg_core::chartab::{
    character_table_from_parts, choose_lifting_prime, class_matrix, class_matrices, ClassMatrix,
};
use codeg_core::{verify_orthogonality, CharacterTable, Group};

use crate::CliError;

/// Computes all class matrices, fanning the per-class work out over
/// `threads` OS threads (round-robin by class index). The result is
/// identical to the serial computation.
pub fn class_matrices_parallel(g: &Group, threads: usize) -> Vec<ClassMatrix> {
    let k = g.num_classes();
    if threads <= 1 || k <= 1 {
        return class_matrices(g);
    }
    let workers = threads.min(k);
    let mut slots: Vec<Option<ClassMatrix>> = (0..k).map(|_| None).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|t| {
                scope.spawn(move || -> Vec<(usize, ClassMatrix)> {
                    (t..k).step_by(workers).map(|i| (i, class_matrix(g, i))).collect()
                })
            })
            .collect();
        for handle in handles {
            for (i, m) in handle.join().expect("class-matrix worker panicked") {
                slots[i] = Some(m);
            }
        }
    });
    slots
        .into_iter()
        .map(|slot| slot.expect("every class index assigned to a worker"))
        .collect()
}

/// Full exact table: class matrices (possibly parallel), modular table at
/// the lifting prime, cyclotomic lift, and an orthogonality replay as a
/// final soundness gate.
pub fn compute_table(
    g: &Group,
    prime_override: Option<u64>,
    threads: usize,
) -> Result<CharacterTable, CliError> {
    let matrices = class_matrices_parallel(g, threads);
    let prime = match prime_override {
        Some(p) => p,
        None => choose_lifting_prime(g.order(), g.exponent())?,
    };
    let table = character_table_from_parts(g, prime, &matrices)?;
    verify_orthogonality(&table).map_err(|f| CliError::Orthogonality(f.to_string()))?;
    Ok(table)
}
