#pragma once

#include <iosfwd>
#include <string>

#include "qreg/op.hpp"
#include "qreg/types.hpp"

namespace qreg {

// On-disk form of a state or operator: a JSON document with fields `kind`
// ("ket" | "dm" | "op"), `d`, `n`, and `data`, where data lists [re, im]
// pairs in row-major order. Readers reject any length mismatch.

enum class PayloadKind { ket, dm, op };

struct Payload {
  PayloadKind kind = PayloadKind::ket;
  int d = 2;
  int n = 1;
  Vec vec;  // set when kind is ket
  Mat mat;  // set when kind is dm or op
};

Payload make_ket(const Vec& v, int d = 2);
Payload make_dm(const Mat& m, int d = 2);
Payload make_op(const Op& m, int d = 2);

void save_payload(std::ostream& out, const Payload& p);
void save_payload(const std::string& path, const Payload& p);

Payload load_payload(std::istream& in);
Payload load_payload(const std::string& path);

// views with the checks a consumer needs
StateLike payload_state(const Payload& p);  // ket or dm
Op payload_op(const Payload& p);            // op, or a dm reused as one

}  // namespace qreg
