#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qreg/chains.hpp"
#include "qreg/core.hpp"
#include "qreg/entangle.hpp"
#include "qreg/io.hpp"
#include "qreg/pauli.hpp"
#include "qreg/permute.hpp"
#include "qreg/random.hpp"
#include "qreg/states.hpp"

using namespace qreg;

namespace {

// semantic misuse of the command line (unknown family, missing flag);
// reported like a parser error, not a computation failure
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Payload read_in(const std::string& path) {
  if (path.empty()) return load_payload(std::cin);
  return load_payload(path);
}

void write_out(const std::string& path, const Payload& p) {
  if (path.empty()) save_payload(std::cout, p);
  else save_payload(path, p);
}

void print_scalar(double x) { std::printf("%.6g\n", x); }

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& given) {
  std::uint64_t seed;
  if (given) {
    seed = *given;
  } else {
    std::random_device rd;
    seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  std::fprintf(stderr, "seed = %llu\n", static_cast<unsigned long long>(seed));
  return seed;
}

SearchParams to_params(const std::vector<double>& par) {
  if (par.empty()) return {};
  if (par.size() != 3) throw UsageError("--par takes three values: trials,refinements,step");
  return {static_cast<int>(par[0]), static_cast<int>(par[1]), par[2]};
}

struct StateMakeOpts {
  std::string name;
  int n = 0, m = -1, d = 2;
  double a = 0.5;
  std::string out;
};

void run_state_make(const StateMakeOpts& o) {
  auto need_n = [&] {
    if (o.n <= 0) throw UsageError("state make " + o.name + ": --n is required");
    return o.n;
  };
  Payload p;
  if (o.name == "ghz") p = make_ket(ghzstate(need_n()), 2);
  else if (o.name == "w") p = make_ket(wstate(need_n()), 2);
  else if (o.name == "cluster") p = make_ket(cstate(need_n()), 2);
  else if (o.name == "ring") p = make_ket(rstate(need_n()), 2);
  else if (o.name == "dicke") {
    if (o.m < 0) throw UsageError("state make dicke: --m is required");
    p = make_ket(dstate(o.m, need_n()), 2);
  } else if (o.name == "me") p = make_ket(mestate(o.d), o.d);
  else if (o.name == "singlet") p = make_ket(singlet(need_n()), 2);
  else if (o.name == "smolin") p = make_dm(smolinstate(), 2);
  else if (o.name == "mm") p = make_dm(mmstate({need_n(), o.d}), o.d);
  else if (o.name == "upb3x3") p = make_dm(bes_upb3x3(), 3);
  else if (o.name == "horodecki3x3") p = make_dm(bes_horodecki3x3(o.a), 3);
  else if (o.name == "horodecki4x2") p = make_dm(bes_horodecki4x2(o.a), 2);
  else throw UsageError("state make: unknown family '" + o.name + "'");
  write_out(o.out, p);
}

struct ChainOpts {
  std::string kind;
  int n = 0, nx = 0, ny = 0;
  double b = 0.0, jx = 0.0, jy = 0.0;
  bool periodic = false, sparse = false, ground = false;
  std::optional<double> thermal;
  std::string out;
};

void run_chain(const ChainOpts& o) {
  const Boundary bd = o.periodic ? Boundary::periodic : Boundary::aperiodic;
  std::optional<Storage> st;
  if (o.sparse) st = Storage::sparse;
  Op h = Op(Mat::Zero(1, 1));
  if (o.kind == "ising") h = ising(o.b, o.n, bd, st);
  else if (o.kind == "heisenberg") h = heisenberg(o.n, bd, st);
  else if (o.kind == "xy") h = xy_hamiltonian({o.jx, o.jy, o.b}, o.n, bd, st);
  else h = ising2d(o.b, o.nx, o.ny, bd);
  if (o.ground) print_scalar(mineig(h));
  else if (o.thermal) print_scalar(std::real(ex(h, thstate(h, *o.thermal))));
  else write_out(o.out, make_op(h, 2));
}

struct EntOpts {
  std::string in;
  QuditList qudits;
  std::vector<double> par;
  std::optional<std::uint64_t> seed;
};

Vec ket_of(const Payload& p, const char* who) {
  if (p.kind != PayloadKind::ket)
    throw std::invalid_argument(std::string(who) + ": a ket payload is required");
  return p.vec;
}

struct RandOpts {
  std::string kind;
  int n = 1, d = 2, iters = 100;
  std::optional<std::uint64_t> seed;
  std::string in, out;
};

void run_rand(const RandOpts& o) {
  RandomSource rng(resolve_seed(o.seed));
  if (o.kind == "twirl") {
    const Payload p = read_in(o.in);
    const TwirlResult res = twirl(payload_state(p), rng, p.d, o.iters);
    std::fprintf(stderr, "difference = %.6g\n", res.difference);
    write_out(o.out, make_dm(res.state, p.d));
    return;
  }
  const RegisterShape shape{o.n, o.d};
  if (o.kind == "vec") write_out(o.out, make_ket(rvec(shape, rng), o.d));
  else if (o.kind == "product") write_out(o.out, make_ket(rproduct(shape, rng), o.d));
  else if (o.kind == "dmat") write_out(o.out, make_dm(rdmat(shape, rng), o.d));
  else write_out(o.out, make_op(Op(runitary(shape, rng)), o.d));
}

void add_io_in(CLI::App* cmd, std::string& in) {
  cmd->add_option("--in", in, "input payload file (default: standard input)");
}

void add_io_out(CLI::App* cmd, std::string& out) {
  cmd->add_option("--out", out, "output payload file (default: standard output)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-qudit register toolkit"};
  app.require_subcommand(1);

  // state make | state print
  auto* state = app.add_subcommand("state", "construct and display states");
  state->require_subcommand(1);
  auto smo = std::make_shared<StateMakeOpts>();
  auto* smake = state->add_subcommand("make", "write a named state as a payload");
  smake->add_option("name", smo->name,
                    "ghz|w|cluster|ring|dicke|me|singlet|smolin|mm|upb3x3|horodecki3x3|horodecki4x2")
      ->required();
  smake->add_option("--n", smo->n, "qudit count");
  smake->add_option("--m", smo->m, "excitation count (dicke)");
  smake->add_option("--d", smo->d, "local dimension")->capture_default_str();
  smake->add_option("--a", smo->a, "family parameter (horodecki)")->capture_default_str();
  add_io_out(smake, smo->out);
  smake->callback([smo] { run_state_make(*smo); });

  auto spin = std::make_shared<std::string>();
  auto spthr = std::make_shared<double>(1e-4);
  auto* sprint = state->add_subcommand("print", "render a ket as a basis superposition");
  add_io_in(sprint, *spin);
  sprint->add_option("--threshold", *spthr, "amplitude cutoff")->capture_default_str();
  sprint->callback([spin, spthr] {
    const Payload p = read_in(*spin);
    std::printf("%s\n", printv(ket_of(p, "state print"), *spthr).c_str());
  });

  // op build | op decompose
  auto* op = app.add_subcommand("op", "build and render operators");
  op->require_subcommand(1);
  auto obexpr = std::make_shared<std::string>();
  auto obout = std::make_shared<std::string>();
  auto* obuild = op->add_subcommand("build", "operator from a Pauli expression");
  obuild->add_option("--pauli", *obexpr, "expression like \"xx+yy+zz\"")->required();
  add_io_out(obuild, *obout);
  obuild->callback([obexpr, obout] { write_out(*obout, make_op(paulistr(*obexpr), 2)); });

  auto odin = std::make_shared<std::string>();
  auto odthr = std::make_shared<double>(1e-14);
  auto odtex = std::make_shared<bool>(false);
  auto* odec = op->add_subcommand("decompose", "render an operator over Pauli words");
  add_io_in(odec, *odin);
  odec->add_flag("--latex", *odtex, "sigma-superscript rendering");
  odec->add_option("--threshold", *odthr, "coefficient cutoff")->capture_default_str();
  odec->callback([odin, odthr, odtex] {
    const Payload p = read_in(*odin);
    std::printf("%s\n", decompose(payload_op(p), *odtex, *odthr).c_str());
  });

  // reg reorder | keep | remove
  auto* reg = app.add_subcommand("reg", "rearrange register qudits");
  reg->require_subcommand(1);
  struct RegOpts {
    std::string in, out;
    Perm perm;
    QuditList qudits;
  };
  auto rro = std::make_shared<RegOpts>();
  auto* rre = reg->add_subcommand("reorder", "permute qudits of a payload");
  rre->add_option("--perm", rro->perm, "printed-order qudit list, e.g. 2,3,1")
      ->required()
      ->delimiter(',');
  add_io_in(rre, rro->in);
  add_io_out(rre, rro->out);
  rre->callback([rro] {
    Payload p = read_in(rro->in);
    if (p.kind == PayloadKind::ket) p.vec = reorder(p.vec, rro->perm, p.d);
    else p.mat = reorder(p.mat, rro->perm, p.d);
    write_out(rro->out, p);
  });

  auto rko = std::make_shared<RegOpts>();
  auto* rke = reg->add_subcommand("keep", "partial trace onto the listed qudits");
  rke->add_option("--qudits", rko->qudits, "qudits to keep, e.g. 1,3")->required()->delimiter(',');
  add_io_in(rke, rko->in);
  add_io_out(rke, rko->out);
  rke->callback([rko] {
    const Payload p = read_in(rko->in);
    write_out(rko->out, make_dm(keep(payload_state(p), rko->qudits, p.d), p.d));
  });

  auto rmo = std::make_shared<RegOpts>();
  auto* rme = reg->add_subcommand("remove", "partial trace over the listed qudits");
  rme->add_option("--qudits", rmo->qudits, "qudits to trace out")->required()->delimiter(',');
  add_io_in(rme, rmo->in);
  add_io_out(rme, rmo->out);
  rme->callback([rmo] {
    const Payload p = read_in(rmo->in);
    write_out(rmo->out, make_dm(remove(payload_state(p), rmo->qudits, p.d), p.d));
  });

  // chain builders
  auto* chain = app.add_subcommand("chain", "spin-chain and lattice Hamiltonians");
  chain->require_subcommand(1);
  auto add_chain = [&](const std::string& kind, const char* help) {
    auto co = std::make_shared<ChainOpts>();
    co->kind = kind;
    auto* c = chain->add_subcommand(kind, help);
    if (kind == "lattice2d") {
      c->add_option("--nx", co->nx, "columns")->required();
      c->add_option("--ny", co->ny, "rows")->required();
    } else {
      c->add_option("--n", co->n, "site count")->required();
    }
    if (kind != "heisenberg") c->add_option("--b", co->b, "transverse field")->capture_default_str();
    if (kind == "xy") {
      c->add_option("--jx", co->jx, "xx coupling")->required();
      c->add_option("--jy", co->jy, "yy coupling")->required();
    }
    c->add_flag("--periodic", co->periodic, "wrap the chain or lattice");
    if (kind != "lattice2d") c->add_flag("--sparse", co->sparse, "force sparse storage");
    auto* g = c->add_flag("--ground-energy", co->ground, "print the lowest eigenvalue");
    double tdummy = 0;
    auto* t = c->add_option("--thermal", tdummy, "print the energy at this temperature");
    t->each([co](const std::string& v) { co->thermal = std::stod(v); });
    g->excludes(t);
    add_io_out(c, co->out);
    c->callback([co] { run_chain(*co); });
  };
  add_chain("ising", "transverse-field Ising chain");
  add_chain("heisenberg", "isotropic Heisenberg chain");
  add_chain("xy", "anisotropic XY chain with field");
  add_chain("lattice2d", "2-D transverse-field Ising lattice (sparse-built)");

  // entanglement criteria
  auto* ent = app.add_subcommand("ent", "entanglement criteria and searches");
  ent->require_subcommand(1);
  auto add_ent = [&](const std::string& name, const char* help, bool qudits, bool stochastic,
                     auto body) {
    auto eo = std::make_shared<EntOpts>();
    auto* e = ent->add_subcommand(name, help);
    add_io_in(e, eo->in);
    if (qudits)
      e->add_option("--qudits", eo->qudits, "qudit list, e.g. 1,3")->required()->delimiter(',');
    if (stochastic) {
      e->add_option("--op", eo->in, "operator payload file (alias of --in)");
      e->add_option("--par", eo->par, "search knobs trials,refinements,step")->delimiter(',');
      std::uint64_t sdummy = 0;
      e->add_option("--seed", sdummy, "random stream seed")->each([eo](const std::string& v) {
        eo->seed = std::stoull(v);
      });
    }
    e->callback([eo, body] { body(*eo); });
  };
  add_ent("negativity", "negative partial-transpose weight", true, false, [](const EntOpts& o) {
    const Payload p = read_in(o.in);
    print_scalar(negativity(payload_state(p), o.qudits, p.d));
  });
  add_ent("ccnr", "trace norm of the realigned state", false, false, [](const EntOpts& o) {
    print_scalar(ccnr(payload_state(read_in(o.in))));
  });
  add_ent("concurrence", "two-qubit concurrence", false, false, [](const EntOpts& o) {
    print_scalar(concurrence(payload_state(read_in(o.in))));
  });
  add_ent("schmidt", "Schmidt coefficients across a cut", true, false, [](const EntOpts& o) {
    const Payload p = read_in(o.in);
    const Eigen::VectorXd s = schmidt(ket_of(p, "schmidt"), o.qudits);
    for (int i = 0; i < s.size(); ++i) std::printf(i ? " %.6g" : "%.6g", s(i));
    std::printf("\n");
  });
  add_ent("overlapb", "best product overlap over bipartitions", false, false,
          [](const EntOpts& o) {
            const Payload p = read_in(o.in);
            print_scalar(overlapb(ket_of(p, "overlapb")));
          });
  add_ent("optspinsq", "spin-squeezing margins: fmin f1 f2 f3", false, false,
          [](const EntOpts& o) {
            const SpinSqueezingReport r = optspinsq(payload_state(read_in(o.in)));
            std::printf("%.6g %.6g %.6g %.6g\n", r.fmin, r.f123[0], r.f123[1], r.f123[2]);
          });
  add_ent("maxsep", "stochastic separable maximum", false, true, [](const EntOpts& o) {
    const SearchParams par = to_params(o.par);
    const Payload p = read_in(o.in);
    RandomSource rng(resolve_seed(o.seed));
    print_scalar(maxsep(payload_op(p), rng, p.d, par).value);
  });
  add_ent("maxbisep", "maximum over one bipartition", true, true, [](const EntOpts& o) {
    const SearchParams par = to_params(o.par);
    const Payload p = read_in(o.in);
    RandomSource rng(resolve_seed(o.seed));
    print_scalar(maxbisep(payload_op(p), o.qudits, rng, par));
  });
  add_ent("maxb", "maximum over every bipartition", false, true, [](const EntOpts& o) {
    const SearchParams par = to_params(o.par);
    const Payload p = read_in(o.in);
    RandomSource rng(resolve_seed(o.seed));
    print_scalar(maxb(payload_op(p), rng, par));
  });

  // random sampling
  auto* rand = app.add_subcommand("rand", "seeded random states and operators");
  rand->require_subcommand(1);
  auto add_rand = [&](const std::string& kind, const char* help) {
    auto ro = std::make_shared<RandOpts>();
    ro->kind = kind;
    auto* r = rand->add_subcommand(kind, help);
    if (kind == "twirl") {
      add_io_in(r, ro->in);
      r->add_option("--iters", ro->iters, "averaging rounds")->capture_default_str();
    } else {
      r->add_option("--n", ro->n, "qudit count")->capture_default_str();
      r->add_option("--d", ro->d, "local dimension")->capture_default_str();
    }
    std::uint64_t sdummy = 0;
    r->add_option("--seed", sdummy, "random stream seed")->each([ro](const std::string& v) {
      ro->seed = std::stoull(v);
    });
    add_io_out(r, ro->out);
    r->callback([ro] { run_rand(*ro); });
  };
  add_rand("vec", "uniform pure state");
  add_rand("product", "product of uniform single-qudit states");
  add_rand("dmat", "Hilbert-Schmidt random density matrix");
  add_rand("unitary", "Haar random unitary");
  add_rand("twirl", "average a state toward the collective commutant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
