#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace epistat {

// All toolkit failures derive from Error. `kind()` is a stable machine-readable
// tag; the CLI prints it in its one-line error output and maps UsageError to
// exit code 2, everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message) : Error("usage", message) {}
};

class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& message) : Error("schema", message) {}
};

class RowError : public Error {
 public:
  RowError(std::size_t row, const std::string& message)
      : Error("row", "row " + std::to_string(row) + ": " + message), row_(row) {}

  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

class EmptyCorpusError : public Error {
 public:
  explicit EmptyCorpusError(const std::string& message)
      : Error("empty-corpus", message) {}
};

class LexiconError : public Error {
 public:
  explicit LexiconError(const std::string& message) : Error("lexicon", message) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error("domain", message) {}
};

class SingularDesignError : public Error {
 public:
  SingularDesignError(const std::string& message, std::vector<std::string> columns)
      : Error("singular-design", message), columns_(std::move(columns)) {}

  const std::vector<std::string>& dependent_columns() const { return columns_; }

 private:
  std::vector<std::string> columns_;
};

class ClusterError : public Error {
 public:
  explicit ClusterError(const std::string& message) : Error("cluster", message) {}
};

// Carries the (iteration, log-likelihood, alpha) trace of a failed fit.
class ConvergenceError : public Error {
 public:
  struct TracePoint {
    int iteration;
    double log_likelihood;
    double alpha;
  };

  ConvergenceError(const std::string& message, std::vector<TracePoint> trace)
      : Error("convergence", message), trace_(std::move(trace)) {}

  const std::vector<TracePoint>& trace() const { return trace_; }

 private:
  std::vector<TracePoint> trace_;
};

class DegenerateGroupError : public Error {
 public:
  explicit DegenerateGroupError(const std::string& message)
      : Error("degenerate-group", message) {}
};

class StratumError : public Error {
 public:
  explicit StratumError(const std::string& message) : Error("stratum", message) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message) : Error("config", message) {}
};

}  // namespace epistat
