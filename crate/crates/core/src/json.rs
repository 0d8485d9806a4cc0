//! JSON helpers: big integers are written as plain JSON numbers.

use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

pub fn big_number(v: &BigUint) -> serde_json::Number {
    serde_json::Number::from_str(&v.to_string()).expect("decimal digits form a JSON number")
}

pub fn serialize_big<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    big_number(v).serialize(s)
}
