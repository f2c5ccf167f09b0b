pub mod bracket;
pub mod cli;
pub mod khovanov;
pub mod linkdiag;
pub mod rotant;
