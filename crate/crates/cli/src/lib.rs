//! Library surface of the `hbk` command-line tool, split out so the
//! integration and acceptance tests can drive the same code paths the
//! binary uses.

pub mod campaign;
pub mod commands;
pub mod output;

use hbk_core::Error;

/// Process exit codes: 0 success, 1 property violation, 2 invalid flags,
/// 3 numeric failure.
pub fn exit_code_for(error: &Error) -> u8 {
    match error {
        Error::Parameter(_)
        | Error::Pole { .. }
        | Error::HypergeometricDomain { .. }
        | Error::InsufficientOrder { .. }
        | Error::NonzeroConstantTerm { .. } => 2,
        _ => 3,
    }
}

/// Applies the `HBK_THREADS` worker cap to the global rayon pool. Must be
/// called before any parallel work; errors (pool already built) are
/// ignored.
pub fn apply_thread_cap() {
    if let Ok(raw) = std::env::var("HBK_THREADS") {
        if let Ok(threads) = raw.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}
