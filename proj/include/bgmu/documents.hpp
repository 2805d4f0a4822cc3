#pragma once

// Stable, versioned output documents. Every document embeds its schema tag
// and the fully resolved run configuration, and is byte-identical for
// identical (command, config, seed) regardless of worker count.

#include "bgmu/checks.hpp"
#include "bgmu/iso.hpp"
#include "bgmu/strata.hpp"

namespace bgmu::io {

struct RunConfig {
  uint64_t seed = 20240601;
  size_t samples = 1000;
  long long degree_bound = 2;
  bool verify = false;
  size_t support_ceiling = 8192;
  uint32_t q = 3;
  uint32_t m = 1;
  unsigned workers = 1;

  std::string describe() const;  // single-line key=value form
};

std::string table_document(std::string const& group, strata::TableResult const& t,
                           RunConfig const& cfg, std::string const& format);

std::string hasse_dot(std::string const& group, strata::TableResult const& t,
                      RunConfig const& cfg);

std::string check_document(std::string const& group, QVec const& mu,
                           strata::CheckReport const& rep, RunConfig const& cfg,
                           std::string const& format);

std::string oracle_document(iso::LaurentMatrix const& m, ZVec const& cartan, QVec const& newton,
                            long long kappa, iso::NewtonVerification const& ver,
                            RunConfig const& cfg, std::string const& format);

std::string mazur_document(std::string const& group, iso::MazurReport const& rep,
                           std::vector<QVec> const& expected_classes, RunConfig const& cfg,
                           std::string const& format);

struct KrClassVerdict {
  QVec nu;
  std::optional<iso::MonomialElement> witness;
  bool randomized_hit = false;
  size_t tried = 0;
};

std::string kr_document(std::string const& group, ZVec const& mu,
                        std::vector<KrClassVerdict> const& verdicts, RunConfig const& cfg,
                        std::string const& format);

}  // namespace bgmu::io
