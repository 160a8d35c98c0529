#pragma once

#include "qwalk/coin.hpp"
#include "qwalk/state.hpp"
#include "qwalk/timeavg.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace qwalk {

/// Raised for malformed command-line input.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// `grover`, `a1`, `a2`, `identity`, `a4:<p>` or `file:<path>`.
Coin parse_coin(std::string_view selector);

/// Complex literal: `x`, `x+yi`, `yi`, `i`, `r e^{i t}` written `re^{it}`.
/// The exponent body is `i` followed by an optional real factor, with an
/// optional `/divisor`: `e^{i}`, `e^{i/3}`, `e^{i0.5}`, `e^{i*2/3}`.
Complex parse_complex(std::string_view text);

struct ParsedInitial {
  InitialSpec spec;
  std::string text;
  /// |norm - 1| of the raw weights; the spec is rescaled when > 1e-6.
  double norm_deviation = 0.0;
  bool rescaled = false;
};

/// `R|L|U|D` or `custom:a,b,c,d`.
ParsedInitial parse_initial(std::string_view text);

Parity parse_parity(std::string_view text);

enum class Backend { Direct, Spectral };
enum class OutputFormat { Csv, Json };

struct RunConfig {
  std::string command;
  std::string coin_selector = "grover";
  int size = 51;
  long long steps = 0;
  std::string initial = "R";
  std::string output = "-";
  OutputFormat format = OutputFormat::Csv;
  Parity parity = Parity::All;
  Backend backend = Backend::Direct;
  std::string method = "exact";
  int samples = 201;
  unsigned threads = 1;
};

/// Reads QWALK_THREADS; returns fallback when unset or invalid.
unsigned threads_from_env(unsigned fallback = 1);

}  // namespace qwalk
