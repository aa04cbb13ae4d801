#include "qreg/io.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace qreg {

namespace {

using nlohmann::json;

const char* kind_name(PayloadKind k) {
  switch (k) {
    case PayloadKind::ket: return "ket";
    case PayloadKind::dm: return "dm";
    case PayloadKind::op: return "op";
  }
  throw std::logic_error("payload: unknown kind");
}

PayloadKind kind_from(const std::string& name) {
  if (name == "ket") return PayloadKind::ket;
  if (name == "dm") return PayloadKind::dm;
  if (name == "op") return PayloadKind::op;
  throw std::invalid_argument("payload: kind must be ket, dm or op");
}

json entries_of(const Payload& p) {
  json data = json::array();
  if (p.kind == PayloadKind::ket) {
    for (Index i = 0; i < p.vec.size(); ++i)
      data.push_back({p.vec(i).real(), p.vec(i).imag()});
  } else {
    for (Index i = 0; i < p.mat.rows(); ++i)
      for (Index j = 0; j < p.mat.cols(); ++j)
        data.push_back({p.mat(i, j).real(), p.mat(i, j).imag()});
  }
  return data;
}

cxd entry_at(const json& data, std::size_t i) {
  const json& e = data.at(i);
  if (!e.is_array() || e.size() != 2 || !e.at(0).is_number() || !e.at(1).is_number())
    throw std::invalid_argument("payload: data entries must be [re, im] pairs");
  return {e.at(0).get<double>(), e.at(1).get<double>()};
}

}  // namespace

Payload make_ket(const Vec& v, int d) {
  Payload p;
  p.kind = PayloadKind::ket;
  p.d = d;
  p.n = qsize(v, d);
  p.vec = v;
  return p;
}

Payload make_dm(const Mat& m, int d) {
  Payload p;
  p.kind = PayloadKind::dm;
  p.d = d;
  p.n = qsize(m, d);
  p.mat = m;
  return p;
}

Payload make_op(const Op& m, int d) {
  Payload p;
  p.kind = PayloadKind::op;
  p.d = d;
  p.mat = m.make_dense();
  p.n = qsize(p.mat, d);
  return p;
}

void save_payload(std::ostream& out, const Payload& p) {
  json doc;
  doc["kind"] = kind_name(p.kind);
  doc["d"] = p.d;
  doc["n"] = p.n;
  doc["data"] = entries_of(p);
  out << doc.dump(1) << '\n';
  if (!out) throw std::runtime_error("payload: write failed");
}

void save_payload(const std::string& path, const Payload& p) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("payload: cannot open " + path + " for writing");
  save_payload(f, p);
}

Payload load_payload(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("payload: not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("d") ||
      !doc.contains("n") || !doc.contains("data"))
    throw std::invalid_argument("payload: kind, d, n and data are all required");
  if (!doc["kind"].is_string() || !doc["d"].is_number_integer() ||
      !doc["n"].is_number_integer() || !doc["data"].is_array())
    throw std::invalid_argument("payload: field types are kind:string, d:int, n:int, data:array");

  Payload p;
  p.kind = kind_from(doc["kind"].get<std::string>());
  p.d = doc["d"].get<int>();
  p.n = doc["n"].get<int>();
  if (p.d < 2 || p.n < 1) throw std::invalid_argument("payload: need d >= 2 and n >= 1");
  const Index dim = ipow(p.d, p.n);

  const json& data = doc["data"];
  if (p.kind == PayloadKind::ket) {
    if (static_cast<Index>(data.size()) != dim)
      throw std::invalid_argument("payload: data length does not match d^n");
    p.vec.resize(dim);
    for (Index i = 0; i < dim; ++i) p.vec(i) = entry_at(data, static_cast<std::size_t>(i));
  } else {
    if (static_cast<Index>(data.size()) != dim * dim)
      throw std::invalid_argument("payload: data length does not match d^n squared");
    p.mat.resize(dim, dim);
    for (Index i = 0; i < dim; ++i)
      for (Index j = 0; j < dim; ++j)
        p.mat(i, j) = entry_at(data, static_cast<std::size_t>(i * dim + j));
  }
  return p;
}

Payload load_payload(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("payload: cannot open " + path);
  return load_payload(f);
}

StateLike payload_state(const Payload& p) {
  if (p.kind == PayloadKind::ket) return p.vec;
  if (p.kind == PayloadKind::dm) return p.mat;
  throw std::invalid_argument("payload: an op is not a state");
}

Op payload_op(const Payload& p) {
  if (p.kind == PayloadKind::ket)
    throw std::invalid_argument("payload: a ket is not an operator");
  return Op(p.mat);
}

}  // namespace qreg
