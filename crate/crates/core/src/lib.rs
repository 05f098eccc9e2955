pub mod cohomology;
pub mod coloring;
pub mod gkm;
pub mod hessenberg;
pub mod linalg;
pub mod modular;
pub mod perm;
pub mod poly;
pub mod symfun;
pub mod verify;
