//! Applications (placeholder).
