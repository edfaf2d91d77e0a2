// weyl-ext: exact Ext-group dimensions between standard modules of GL2 in
// characteristic p, with a brute-force enumeration oracle, verification
// sweeps, partition-function series, and growth-bound evaluation.

#include <atomic>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "weylext/bounds.hpp"
#include "weylext/digits.hpp"
#include "weylext/partitions.hpp"
#include "weylext/polytopes.hpp"
#include "weylext/recursion.hpp"
#include "weylext/weights.hpp"

namespace {

using weylext::Count;
using weylext::Int;
using weylext::Prime;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInternal = 2;

int default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(index, engine) for every index in [0, count); workers own their
// engines, results land in caller-owned slots, output happens after joining.
void parallel_for(std::size_t count, int threads, Prime p,
                  const std::function<void(std::size_t, weylext::ExtEngine&)>& fn) {
  if (threads <= 1 || count <= 1) {
    weylext::ExtEngine engine{p};
    for (std::size_t i = 0; i < count; ++i) fn(i, engine);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const int workers = std::min<std::size_t>(threads, count) > 0
                          ? static_cast<int>(std::min<std::size_t>(threads, count))
                          : 1;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      weylext::ExtEngine engine{p};
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        fn(i, engine);
      }
    });
  for (auto& worker : pool) worker.join();
}

struct DimArgs {
  Int p = 0;
  Int k = 0;
  Int m = 0;
  Int e = 0;
  int q = 0;  // 0 = minimal
  bool verbose = false;
};

void add_dim_flags(CLI::App* cmd, DimArgs& args) {
  cmd->add_option("-p", args.p, "characteristic (>= 2; primality unchecked)")
      ->required();
  cmd->add_option("-k", args.k, "cohomological degree")->required();
  cmd->add_option("-m", args.m, "source module index")->required();
  cmd->add_option("-e", args.e, "target module index")->required();
  cmd->add_option("-q", args.q, "block length (default: minimal)");
  cmd->add_flag("--verbose", args.verbose, "show extra detail");
}

std::optional<int> opt_q(const DimArgs& args) {
  if (args.q == 0) return std::nullopt;
  return args.q;
}

int run_dim(const DimArgs& args) {
  weylext::ExtEngine engine{Prime{args.p}};
  const auto split = engine.ext_dim(args.k, args.m, args.e, opt_q(args));
  std::cout << "dimension = " << split.total() << "\n";
  if (args.verbose) {
    std::cout << "d1 = " << split.d1 << "\n"
              << "d2 = " << split.d2 << "\n"
              << "d3 = " << split.d3 << "\n"
              << "d4 = " << split.d4 << "\n";
  }
  return kExitOk;
}

int run_oracle(const DimArgs& args) {
  const Prime p{args.p};
  const int q = args.q != 0 ? args.q : weylext::minimal_q(p, args.m, args.e);
  std::vector<weylext::BasisTuple> tuples;
  if (args.k >= 0 && args.k <= args.e - args.m)
    tuples = weylext::enumerate_basis(p, q, args.k, args.m, args.e);
  else if (args.m < 1 || args.e < 1 ||
           args.m > weylext::pow_saturated(args.p, q) ||
           args.e > weylext::pow_saturated(args.p, q))
    throw std::out_of_range("module indices outside [1, p^q]");
  std::cout << "dimension = " << tuples.size() << "\n";
  if (args.verbose)
    for (const auto& tuple : tuples) {
      for (const auto& v : tuple)
        std::cout << "(" << v.s << "," << v.i << "," << v.j << "," << v.k
                  << "," << v.a << "," << v.b << "," << v.t << ")";
      std::cout << "\n";
    }
  return kExitOk;
}

struct TableArgs {
  Int p = 0;
  int q = 1;
  Int k = 0;
  Int m = 0;
  Int e = 0;
  bool m_set = false;
  bool e_set = false;
  int threads = default_threads();
};

constexpr Int kMaxGridSide = 1 << 12;

int run_table(const TableArgs& args) {
  const Prime p{args.p};
  const Int block = weylext::pow_saturated(args.p, args.q);
  if (block > kMaxGridSide && !args.m_set && !args.e_set)
    throw std::invalid_argument(
        "full table would exceed " + std::to_string(kMaxGridSide) +
        "^2 cells; fix -m or -e or lower -q");
  if (block > (Int{1} << 30))
    throw std::invalid_argument("block is too large to sweep; lower -q");
  std::ostringstream out;

  if (args.m_set || args.e_set) {
    const Int fixed = args.m_set ? args.m : args.e;
    if (fixed < 1 || fixed > block)
      throw std::out_of_range("fixed index outside [1, p^q]");
    const std::size_t count = static_cast<std::size_t>(block);
    std::vector<Count> dims(count);
    parallel_for(count, args.threads, p,
                 [&](std::size_t i, weylext::ExtEngine& engine) {
                   const Int other = static_cast<Int>(i) + 1;
                   dims[i] = args.m_set
                                 ? engine.ext_dim(args.k, args.m, other, args.q)
                                       .total()
                                 : engine.ext_dim(args.k, other, args.e, args.q)
                                       .total();
                 });
    out << (args.m_set ? "e,dim" : "m,dim") << "\n";
    for (std::size_t i = 0; i < count; ++i)
      out << (i + 1) << "," << dims[i] << "\n";
  } else {
    const std::size_t count = static_cast<std::size_t>(block * block);
    std::vector<Count> dims(count);
    parallel_for(count, args.threads, p,
                 [&](std::size_t i, weylext::ExtEngine& engine) {
                   const Int e = static_cast<Int>(i) / block + 1;
                   const Int m = static_cast<Int>(i) % block + 1;
                   dims[i] = engine.ext_dim(args.k, m, e, args.q).total();
                 });
    out << "e\\m";
    for (Int m = 1; m <= block; ++m) out << "," << m;
    out << "\n";
    for (Int e = 1; e <= block; ++e) {
      out << e;
      for (Int m = 1; m <= block; ++m)
        out << "," << dims[static_cast<std::size_t>((e - 1) * block + m - 1)];
      out << "\n";
    }
  }
  std::cout << out.str();
  return kExitOk;
}

struct VerifyArgs {
  Int p = 0;
  int q = 1;
  Int kmax = -1;  // -1 = p^q - 1
  int threads = default_threads();
};

int run_verify(const VerifyArgs& args) {
  const Prime p{args.p};
  const Int block = weylext::pow_saturated(args.p, args.q);
  if (block > kMaxGridSide)
    throw std::invalid_argument("block is too large to sweep; lower -q");
  const Int kmax = args.kmax >= 0 ? args.kmax : block - 1;

  struct Failure {
    std::string property;
    Int k, m, e;
    std::string detail;
  };
  const std::size_t count = static_cast<std::size_t>(block * block);
  std::vector<std::optional<Failure>> failures(count);

  parallel_for(count, args.threads, p,
               [&](std::size_t i, weylext::ExtEngine& engine) {
                 const Int e = static_cast<Int>(i) / block + 1;
                 const Int m = static_cast<Int>(i) % block + 1;
                 for (Int k = 0; k <= kmax; ++k) {
                   const Count dim = engine.ext_dim(k, m, e, args.q).total();
                   if (k <= e - m) {
                     const auto chained =
                         weylext::enumerate_basis(p, args.q, k, m, e);
                     const auto cased =
                         weylext::enumerate_cases(p, args.q, k, m, e);
                     if (dim != chained.size() || chained.size() != cased.size()) {
                       std::ostringstream detail;
                       detail << "recursion=" << dim
                              << " chained=" << chained.size()
                              << " cases=" << cased.size();
                       failures[i] = Failure{"oracle", k, m, e, detail.str()};
                       return;
                     }
                   } else if (dim != 0) {
                     failures[i] = Failure{"zero-region", k, m, e, "dim != 0"};
                     return;
                   }
                   const auto [mm, ee] = weylext::duality_partner(p, args.q, m, e);
                   const Count mirror = engine.ext_dim(k, mm, ee, args.q).total();
                   if (dim != mirror) {
                     std::ostringstream detail;
                     detail << "dim=" << dim << " mirror=" << mirror;
                     failures[i] = Failure{"duality", k, m, e, detail.str()};
                     return;
                   }
                   const Count wider = engine.ext_dim(k, m, e, args.q + 1).total();
                   if (dim != wider) {
                     std::ostringstream detail;
                     detail << "q=" << dim << " q+1=" << wider;
                     failures[i] = Failure{"q-stability", k, m, e, detail.str()};
                     return;
                   }
                 }
               });

  for (const auto& failure : failures)
    if (failure) {
      std::cout << "FAIL " << failure->property << " at p=" << args.p
                << " q=" << args.q << " k=" << failure->k << " m=" << failure->m
                << " e=" << failure->e << " (" << failure->detail << ")\n";
      return kExitInternal;
    }
  std::cout << "PASS verify p=" << args.p << " q=" << args.q
            << " (m,e in [1," << block << "], k in [0," << kmax
            << "]): recursion=oracle, duality, q-stability\n";
  return kExitOk;
}

int run_series(Int p, Int d, Int max) {
  weylext::PartitionEngine engine{Prime{p}};
  std::ostringstream out;
  for (Int value = 0; value <= max; ++value)
    out << value << "," << engine.partition_r(value, d) << "\n";
  std::cout << out.str();
  return kExitOk;
}

int run_weights(Int p, Int lambda, Int mu) {
  // The first index (e) comes from lambda, the second (m) from mu.
  const auto pos = weylext::block_position(Prime{p}, {lambda, mu});
  if (!pos) {
    std::cout << "dimension 0 for all k\n";
    return kExitOk;
  }
  std::cout << "m = " << pos->m << ", e = " << pos->e << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "weyl-ext: exact dimensions of Ext-groups between standard modules "
      "of GL2 in characteristic p"};
  app.require_subcommand(1);

  DimArgs dim_args;
  auto* dim_cmd = app.add_subcommand("dim", "dimension of one Ext-group");
  add_dim_flags(dim_cmd, dim_args);

  DimArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "same answer by brute-force basis enumeration");
  add_dim_flags(oracle_cmd, oracle_args);

  TableArgs table_args;
  auto* table_cmd = app.add_subcommand("table", "CSV table of dimensions");
  table_cmd->add_option("-p", table_args.p, "characteristic")->required();
  table_cmd->add_option("-q", table_args.q, "block length")
      ->required()
      ->check(CLI::PositiveNumber);
  table_cmd->add_option("-k", table_args.k, "cohomological degree")
      ->required()
      ->check(CLI::NonNegativeNumber);
  auto* fix_m = table_cmd->add_option("-m", table_args.m, "fix the source index");
  auto* fix_e = table_cmd->add_option("-e", table_args.e, "fix the target index");
  fix_m->excludes(fix_e);
  fix_e->excludes(fix_m);
  table_cmd->add_option("--threads", table_args.threads, "worker count");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand(
      "verify", "sweep a block asserting recursion=oracle, duality, "
                "q-stability");
  verify_cmd->add_option("-p", verify_args.p, "characteristic")->required();
  verify_cmd->add_option("-q", verify_args.q, "block length")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("-k", verify_args.kmax, "max degree (default p^q-1)");
  verify_cmd->add_option("--threads", verify_args.threads, "worker count");

  Int series_p = 0, series_d = 0, series_max = -1;
  auto* series_cmd = app.add_subcommand(
      "series", "emit value,count lines of the decreasing-representation "
                "count at fixed d");
  series_cmd->add_option("-p", series_p, "characteristic")->required();
  series_cmd->add_option("-d", series_d, "part bound d")
      ->required()
      ->check(CLI::NonNegativeNumber);
  series_cmd->add_option("--max", series_max, "largest value scanned");

  auto* partition_cmd =
      app.add_subcommand("partition", "single partition-function values");
  partition_cmd->require_subcommand(1);
  Int pq_p = 0, pq_big = 0, pq_small = 0;
  auto* pq_cmd = partition_cmd->add_subcommand(
      "q", "simultaneous representations of D and d");
  pq_cmd->add_option("-p", pq_p, "characteristic")->required();
  pq_cmd->add_option("-D", pq_big, "weighted sum D")->required();
  pq_cmd->add_option("-d", pq_small, "plain sum d")->required();
  Int pr_p = 0, pr_value = 0, pr_d = 0;
  auto* pr_cmd = partition_cmd->add_subcommand(
      "r", "weakly decreasing representations of M");
  pr_cmd->add_option("-p", pr_p, "characteristic")->required();
  pr_cmd->add_option("-M", pr_value, "represented value M")->required();
  pr_cmd->add_option("-d", pr_d, "part bound d")->required();
  Int pz_p = 0, pz_d = 0, pz_max = -1;
  auto* pz_cmd = partition_cmd->add_subcommand(
      "z", "scanned maximum of the decreasing-representation count");
  pz_cmd->add_option("-p", pz_p, "characteristic")->required();
  pz_cmd->add_option("-d", pz_d, "part bound d")
      ->required()
      ->check(CLI::NonNegativeNumber);
  pz_cmd->add_option("--max", pz_max, "scan limit (default p^(ceil+3))");

  Int bounds_p = 0, bounds_k = -1, bounds_d = -1;
  auto* bounds_cmd =
      app.add_subcommand("bounds", "evaluate growth-bound formulas");
  bounds_cmd->add_option("-p", bounds_p, "characteristic")->required();
  auto* opt_k = bounds_cmd->add_option("-k", bounds_k, "cohomological degree");
  auto* opt_d = bounds_cmd->add_option("-d", bounds_d, "partition degree");
  opt_k->excludes(opt_d);
  opt_d->excludes(opt_k);

  Int weights_p = 0, weights_lambda = 0, weights_mu = 0;
  auto* weights_cmd = app.add_subcommand(
      "weights", "block position of two dominant highest weights");
  weights_cmd->add_option("-p", weights_p, "characteristic")->required();
  weights_cmd->add_option("--lambda", weights_lambda, "first highest weight")
      ->required();
  weights_cmd->add_option("--mu", weights_mu, "second highest weight")
      ->required();

  try {
    app.parse(argc, argv);

    if (*dim_cmd) return run_dim(dim_args);
    if (*oracle_cmd) return run_oracle(oracle_args);
    if (*table_cmd) {
      table_args.m_set = fix_m->count() > 0;
      table_args.e_set = fix_e->count() > 0;
      return run_table(table_args);
    }
    if (*verify_cmd) return run_verify(verify_args);
    if (*series_cmd) {
      if (series_max < 0)
        series_max = weylext::default_scan_limit(Prime{series_p}, series_d);
      return run_series(series_p, series_d, series_max);
    }
    if (*pq_cmd) {
      weylext::PartitionEngine engine{Prime{pq_p}};
      std::cout << "q(" << pq_big << "," << pq_small
                << ") = " << engine.partition_q(pq_big, pq_small) << "\n";
      return kExitOk;
    }
    if (*pr_cmd) {
      weylext::PartitionEngine engine{Prime{pr_p}};
      std::cout << "r(" << pr_value << "," << pr_d
                << ") = " << engine.partition_r(pr_value, pr_d) << "\n";
      return kExitOk;
    }
    if (*pz_cmd) {
      const Prime p{pz_p};
      if (pz_max < 0) pz_max = weylext::default_scan_limit(p, pz_d);
      weylext::PartitionEngine engine{p};
      std::cout << "z(" << pz_d << ") >= " << engine.z_scan(pz_d, pz_max)
                << "  (scanned values up to " << pz_max << ")\n";
      return kExitOk;
    }
    if (*bounds_cmd) {
      const Prime p{bounds_p};
      std::vector<weylext::BoundValue> values;
      if (opt_d->count() > 0)
        values = weylext::bounds_for_d(p, bounds_d);
      else if (opt_k->count() > 0)
        values = weylext::bounds_for_k(p, bounds_k);
      else
        throw std::invalid_argument("bounds needs -k or -d");
      for (const auto& bound : values) {
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "%.12g", bound.value);
        std::cout << bound.formula_id << " = " << buffer << "\n";
      }
      return kExitOk;
    }
    if (*weights_cmd) return run_weights(weights_p, weights_lambda, weights_mu);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
