pub mod alpha0;
pub mod curvature;
pub mod scan;
pub mod sweep;
pub mod verify;
