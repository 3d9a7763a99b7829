/*
 * Copyright (C) 2026 The Pattern Lock Toolkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "patternlock/pattern.h"
#include "patternlock/random.h"

namespace patternlock {

inline constexpr int kAndroidGuessBudget = 20;

struct MarkovOptions {
    int n = 2;
    double alpha = 1.0;
    // Adds P(end | last context) to every pattern probability. Off by default:
    // the literal model has no end-of-sequence term and so favours short patterns.
    bool endSymbol = false;
};

/*
 * n-gram Markov model over dot sequences (n = 2 or 3) with add-alpha
 * smoothing:
 *
 *   P(s1..sl) = P(s1..s(n-1)) * prod_{i=n..l} P(si | s(i-n+1)..s(i-1))
 *   P(prefix)        = (start(prefix) + a) / (trainSize + a * Nprefix)
 *   P(next | ctx)    = (count(ctx -> next) + a) / (out(ctx) + 8a)
 *
 * Nprefix is 9 for bigrams and 72 for trigrams; 8 is the number of dots that
 * can follow any dot. With endSymbol the successor alphabet gains END, so the
 * transition denominator becomes out(ctx) + 9a.
 */
class MarkovModel {
  public:
    // Label used for the end symbol in transitionCount().
    static constexpr int kEndLabel = 0;

    explicit MarkovModel(const MarkovOptions& options);

    const MarkovOptions& options() const { return options_; }
    int order() const { return options_.n; }
    double alpha() const { return options_.alpha; }
    uint64_t trainSize() const { return trainSize_; }

    void add(const Pattern& p);

    // Prefix given as dot labels; size must be n - 1.
    uint64_t startCount(std::span<const int> prefix) const;
    // next is a dot label, or kEndLabel.
    uint64_t transitionCount(std::span<const int> context, int next) const;
    uint64_t outCount(std::span<const int> context) const;

    double probability(const Pattern& p) const;
    // Sum of per-factor logs, added in ascending order with compensation so
    // that patterns sharing a multiset of factors get bit-identical scores.
    double logProbability(const Pattern& p) const;

    // Per-factor logs for every start prefix and (context, next) pair; lets
    // callers score many patterns without recomputing them.
    struct LogTables {
        std::vector<double> start;
        std::vector<std::array<double, kDotCount + 1>> transition;
    };
    LogTables logTables() const;
    double logProbability(const Pattern& p, const LogTables& tables) const;

  private:
    int contextIndex(std::span<const Dot> ctx) const;
    int contextIndexFromLabels(std::span<const int> labels) const;
    int contextCount() const { return options_.n == 2 ? kDotCount : kDotCount * kDotCount; }
    int successorAlphabet() const { return options_.endSymbol ? kDotCount : kDotCount - 1; }

    MarkovOptions options_;
    uint64_t trainSize_ = 0;
    std::vector<uint64_t> startCounts_;
    // [context][next]: next in 0..8 for dots, 9 for the end symbol.
    std::vector<std::array<uint64_t, kDotCount + 1>> transitions_;
    std::vector<uint64_t> outCounts_;
};

// Throws std::invalid_argument when n is not 2 or 3, or alpha <= 0.
MarkovModel fitMarkov(std::span<const Pattern> train, const MarkovOptions& options);
MarkovModel fitMarkov(std::span<const Pattern> train, int n, double alpha);

struct RankedGuess {
    Pattern pattern;
    double logProbability;
};

// Every valid pattern, most probable first; ties broken lexicographically.
using RankedGuessList = std::vector<RankedGuess>;

RankedGuessList rankAll(const MarkovModel& model);
// The first `budget` entries of rankAll(model), computed by partial sort.
RankedGuessList topGuesses(const MarkovModel& model, size_t budget);

// 1-based position of p in the ranking; 0 if absent.
size_t rankOf(const RankedGuessList& ranked, const Pattern& p);

struct CrackReport {
    size_t budget = 0;
    size_t crackedCount = 0;
    size_t testSize = 0;
    double crackedFraction = 0.0;
};

// A test pattern is cracked if it appears among the first `budget` guesses.
// Duplicates in `test` count individually. Throws if budget < 1.
CrackReport simulateAttack(const RankedGuessList& ranked, std::span<const Pattern> test, size_t budget);

struct CrossValidationConfig {
    int folds = 10;
    int repeats = 10;
    MarkovOptions model;
    size_t budget = kAndroidGuessBudget;
    uint64_t seed = 0;
};

struct CrossValidationResult {
    double meanCrackedFraction = 0.0;
    // One entry per (repeat, fold), repeat-major.
    std::vector<double> foldFractions;
};

// Fold sizes differ by at most one; the first (size % folds) folds take the
// extra pattern. Throws if data.size() < folds, folds < 2 or repeats < 1.
std::vector<std::vector<size_t>> partitionFolds(size_t size, int folds, Rng& rng);

CrossValidationResult crossValidate(std::span<const Pattern> data, const CrossValidationConfig& config);

}  // namespace patternlock
