//! Built-in problem library.
