pub mod field;
pub mod integer;
pub mod multilinear;
pub mod nonclassical;
pub mod symmetric;
