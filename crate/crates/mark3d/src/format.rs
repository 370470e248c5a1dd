//! File format (placeholder).
