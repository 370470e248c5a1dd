//! Calculus procedures (placeholder).
