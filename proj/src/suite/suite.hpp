/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <string>
#include <vector>

#include "io.hpp"
#include "ladder.hpp"

namespace ucforge::suite {

/// A canonical corpus file is missing or unreadable.
struct CorpusError : DomainError {
	using DomainError::DomainError;
};

struct CriterionResult {
	int id = 0;
	std::string title;
	bool pass = false;
	std::string detail;
	double seconds = 0;
	io::json data; // per-criterion evidence
};

struct SuiteReport {
	std::vector<CriterionResult> results;

	bool all_pass() const;
	const CriterionResult *first_failure() const;
};

struct SuiteOptions {
	std::string corpus_dir;
	Fault fault = Fault::None;
};

inline const std::vector<std::string> &canonical_scenarios()
{
	static const std::vector<std::string> names{"S_FULL", "S_POINT", "S_EMPTY", "S_INTERVAL"};
	return names;
}

/// Runs the nine acceptance criteria over the canonical corpus.
/// Throws CorpusError when a corpus file cannot be loaded.
SuiteReport run(const SuiteOptions &options);

io::json to_json(const SuiteReport &report);

} // namespace ucforge::suite
