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

#include "patternlock/guessing.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "patternlock/enumeration.h"

namespace patternlock {

namespace {

constexpr int kEndSlot = kDotCount;

void validateOptions(const MarkovOptions& options) {
    if (options.n != 2 && options.n != 3) throw std::invalid_argument("n-gram order must be 2 or 3");
    if (!(options.alpha > 0.0) || !std::isfinite(options.alpha)) {
        throw std::invalid_argument("smoothing constant alpha must be > 0");
    }
}

// Neumaier summation over the terms sorted ascending (insertion sort: n <= 10).
double compensatedSum(std::array<double, kMaxPatternLength + 1>& terms, int count) {
    for (int i = 1; i < count; ++i) {
        const double v = terms[i];
        int j = i - 1;
        while (j >= 0 && terms[j] > v) {
            terms[j + 1] = terms[j];
            --j;
        }
        terms[j + 1] = v;
    }
    double sum = 0.0;
    double carry = 0.0;
    for (int i = 0; i < count; ++i) {
        const double t = sum + terms[i];
        if (std::abs(sum) >= std::abs(terms[i])) {
            carry += (sum - t) + terms[i];
        } else {
            carry += (terms[i] - t) + sum;
        }
        sum = t;
    }
    return sum + carry;
}

bool ranksBefore(const RankedGuess& a, const RankedGuess& b) {
    if (a.logProbability != b.logProbability) return a.logProbability > b.logProbability;
    return a.pattern < b.pattern;
}

RankedGuessList scoreAll(const MarkovModel& model) {
    const auto& space = patternSpace();
    const MarkovModel::LogTables tables = model.logTables();
    RankedGuessList scored;
    scored.reserve(space.size());
    for (const Pattern& p : space) scored.push_back({p, model.logProbability(p, tables)});
    return scored;
}

}  // namespace

MarkovModel::MarkovModel(const MarkovOptions& options) : options_(options) {
    validateOptions(options);
    startCounts_.assign(contextCount(), 0);
    transitions_.assign(contextCount(), {});
    outCounts_.assign(contextCount(), 0);
}

int MarkovModel::contextIndex(std::span<const Dot> ctx) const {
    return options_.n == 2 ? ctx[0].index() : ctx[0].index() * kDotCount + ctx[1].index();
}

int MarkovModel::contextIndexFromLabels(std::span<const int> labels) const {
    if (labels.size() != static_cast<size_t>(options_.n - 1)) {
        throw std::invalid_argument("context length must be n - 1");
    }
    std::array<Dot, 2> dots = {Dot(labels[0]), Dot(labels.size() > 1 ? labels[1] : labels[0])};
    return contextIndex(std::span<const Dot>(dots.data(), labels.size()));
}

void MarkovModel::add(const Pattern& p) {
    const int ctxLen = options_.n - 1;
    const auto dots = p.dots();
    ++trainSize_;
    startCounts_[contextIndex(dots.subspan(0, ctxLen))]++;
    for (int i = ctxLen; i < p.size(); ++i) {
        const int ctx = contextIndex(dots.subspan(i - ctxLen, ctxLen));
        transitions_[ctx][p[i].index()]++;
        outCounts_[ctx]++;
    }
    if (options_.endSymbol) {
        const int ctx = contextIndex(dots.subspan(p.size() - ctxLen, ctxLen));
        transitions_[ctx][kEndSlot]++;
        outCounts_[ctx]++;
    }
}

uint64_t MarkovModel::startCount(std::span<const int> prefix) const {
    return startCounts_[contextIndexFromLabels(prefix)];
}

uint64_t MarkovModel::transitionCount(std::span<const int> context, int next) const {
    const int slot = next == kEndLabel ? kEndSlot : Dot(next).index();
    return transitions_[contextIndexFromLabels(context)][slot];
}

uint64_t MarkovModel::outCount(std::span<const int> context) const {
    return outCounts_[contextIndexFromLabels(context)];
}

MarkovModel::LogTables MarkovModel::logTables() const {
    const double a = options_.alpha;
    const int prefixes = options_.n == 2 ? kDotCount : kDotCount * (kDotCount - 1);
    const double successors = successorAlphabet();
    LogTables t;
    t.start.resize(contextCount());
    t.transition.resize(contextCount());
    const double startDenom = static_cast<double>(trainSize_) + a * prefixes;
    for (int ctx = 0; ctx < contextCount(); ++ctx) {
        t.start[ctx] = std::log((static_cast<double>(startCounts_[ctx]) + a) / startDenom);
        const double denom = static_cast<double>(outCounts_[ctx]) + successors * a;
        for (int slot = 0; slot <= kDotCount; ++slot) {
            t.transition[ctx][slot] = std::log((static_cast<double>(transitions_[ctx][slot]) + a) / denom);
        }
    }
    return t;
}

double MarkovModel::logProbability(const Pattern& p, const LogTables& t) const {
    const int ctxLen = options_.n - 1;
    const auto dots = p.dots();
    std::array<double, kMaxPatternLength + 1> factors;
    int count = 0;
    factors[count++] = t.start[contextIndex(dots.subspan(0, ctxLen))];
    for (int i = ctxLen; i < p.size(); ++i) {
        factors[count++] = t.transition[contextIndex(dots.subspan(i - ctxLen, ctxLen))][p[i].index()];
    }
    if (options_.endSymbol) {
        factors[count++] = t.transition[contextIndex(dots.subspan(p.size() - ctxLen, ctxLen))][kEndSlot];
    }
    return compensatedSum(factors, count);
}

double MarkovModel::logProbability(const Pattern& p) const {
    return logProbability(p, logTables());
}

double MarkovModel::probability(const Pattern& p) const {
    return std::exp(logProbability(p));
}

MarkovModel fitMarkov(std::span<const Pattern> train, const MarkovOptions& options) {
    MarkovModel model(options);
    for (const Pattern& p : train) model.add(p);
    return model;
}

MarkovModel fitMarkov(std::span<const Pattern> train, int n, double alpha) {
    return fitMarkov(train, MarkovOptions{n, alpha, false});
}

RankedGuessList rankAll(const MarkovModel& model) {
    RankedGuessList ranked = scoreAll(model);
    std::sort(ranked.begin(), ranked.end(), ranksBefore);
    return ranked;
}

RankedGuessList topGuesses(const MarkovModel& model, size_t budget) {
    RankedGuessList scored = scoreAll(model);
    budget = std::min(budget, scored.size());
    std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(budget), scored.end(),
                      ranksBefore);
    scored.erase(scored.begin() + static_cast<std::ptrdiff_t>(budget), scored.end());
    return scored;
}

size_t rankOf(const RankedGuessList& ranked, const Pattern& p) {
    for (size_t i = 0; i < ranked.size(); ++i) {
        if (ranked[i].pattern == p) return i + 1;
    }
    return 0;
}

CrackReport simulateAttack(const RankedGuessList& ranked, std::span<const Pattern> test, size_t budget) {
    if (budget < 1) throw std::invalid_argument("guessing budget must be at least 1");
    std::unordered_set<uint32_t> guessed;
    const size_t limit = std::min(budget, ranked.size());
    for (size_t i = 0; i < limit; ++i) guessed.insert(ranked[i].pattern.code());

    CrackReport report;
    report.budget = budget;
    report.testSize = test.size();
    for (const Pattern& t : test) {
        if (guessed.contains(t.code())) ++report.crackedCount;
    }
    report.crackedFraction =
            test.empty() ? 0.0 : static_cast<double>(report.crackedCount) / static_cast<double>(test.size());
    return report;
}

std::vector<std::vector<size_t>> partitionFolds(size_t size, int folds, Rng& rng) {
    if (folds < 2) throw std::invalid_argument("need at least two folds");
    if (size < static_cast<size_t>(folds)) throw std::invalid_argument("fewer patterns than folds");
    std::vector<size_t> order(size);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(std::span<size_t>(order));

    const size_t base = size / folds;
    const size_t extra = size % folds;
    std::vector<std::vector<size_t>> out(folds);
    size_t next = 0;
    for (size_t f = 0; f < static_cast<size_t>(folds); ++f) {
        const size_t take = base + (f < extra ? 1 : 0);
        out[f].assign(order.begin() + next, order.begin() + next + take);
        next += take;
    }
    return out;
}

CrossValidationResult crossValidate(std::span<const Pattern> data, const CrossValidationConfig& config) {
    if (config.repeats < 1) throw std::invalid_argument("need at least one repeat");
    if (config.budget < 1) throw std::invalid_argument("guessing budget must be at least 1");
    validateOptions(config.model);

    Rng rng(config.seed);
    CrossValidationResult result;
    for (int r = 0; r < config.repeats; ++r) {
        const auto folds = partitionFolds(data.size(), config.folds, rng);
        for (size_t f = 0; f < folds.size(); ++f) {
            MarkovModel model(config.model);
            std::vector<Pattern> test;
            for (size_t g = 0; g < folds.size(); ++g) {
                for (size_t idx : folds[g]) {
                    if (g == f) {
                        test.push_back(data[idx]);
                    } else {
                        model.add(data[idx]);
                    }
                }
            }
            const RankedGuessList top = topGuesses(model, config.budget);
            result.foldFractions.push_back(simulateAttack(top, test, config.budget).crackedFraction);
        }
    }
    double sum = 0.0;
    for (double v : result.foldFractions) sum += v;
    result.meanCrackedFraction = sum / static_cast<double>(result.foldFractions.size());
    return result;
}

}  // namespace patternlock
