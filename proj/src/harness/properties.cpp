#include <launchpad/arith.hpp>
#include <launchpad/assets.hpp>
#include <launchpad/claim.hpp>
#include <launchpad/deposit.hpp>
#include <launchpad/discounts.hpp>
#include <launchpad/distribution.hpp>
#include <launchpad/harness/generate.hpp>
#include <launchpad/harness/oracle.hpp>
#include <launchpad/harness/properties.hpp>
#include <launchpad/harness/replay.hpp>
#include <launchpad/harness/rng.hpp>
#include <launchpad/launchpad.hpp>
#include <launchpad/withdraw.hpp>

#include <algorithm>
#include <chrono>
#include <set>

namespace launchpad::harness
{

namespace
{
    using oracle::Big;
    using oracle::big;
    using launchpad::to_string;

    std::string show(Nat v)
    {
        return to_string(v);
    }

    template <typename... Ts>
    std::string args(Ts const &...values)
    {
        std::string out = "(";
        bool first = true;
        ((out += (first ? "" : ", ") + show(values), first = false), ...);
        return out + ")";
    }

    Nat grid(PropertyBudget const &b, Nat full, Nat reduced)
    {
        return b.full_grids ? full : reduced;
    }

    Nat positive(Rng &rng)
    {
        Nat v = rng.log_uniform_nat();
        return v == 0 ? 1 : v;
    }

    Nat saturating_add(Nat a, Nat b)
    {
        Nat sum;
        return __builtin_add_overflow(a, b, &sum) ? kNatMax : sum;
    }

    /// Implementation result or nullopt on overflow; anything else throws.
    std::optional<Nat> try_mul_div(Nat x, Nat y, Nat k)
    {
        try {
            return mul_div_floor(x, y, k);
        }
        catch (Error const &e) {
            if (e.kind() != ErrorKind::overflow) {
                throw;
            }
            return std::nullopt;
        }
    }

    void expect_oracle_mul_div(Tally &t, Nat x, Nat y, Nat k)
    {
        auto const expected =
            oracle::narrow(oracle::mul_div_floor(big(x), big(y), big(k)));
        t.expect(try_mul_div(x, y, k) == expected, [&] {
            return "mul_div_floor" + args(x, y, k) + " disagrees with oracle";
        });
    }

    // ---------------------------------------------------------------- arith

    void mul_div_oracle(PropertyBudget const &b, Tally &t)
    {
        Nat const n = grid(b, 64, 16);
        for (Nat x = 0; x <= n; ++x) {
            for (Nat y = 0; y <= n; ++y) {
                for (Nat k = 1; k <= n; ++k) {
                    t.expect(mul_div_floor(x, y, k) == x * y / k, [&] {
                        return "mul_div_floor" + args(x, y, k);
                    });
                }
            }
        }
        Rng rng(b.seed);
        for (std::uint64_t i = 0; i < b.samples; ++i) {
            expect_oracle_mul_div(t, rng.log_uniform_nat(), rng.log_uniform_nat(), positive(rng));
        }
    }

    void div_mul_bounds(PropertyBudget const &b, Tally &t)
    {
        auto check = [&](Nat x, Nat y) {
            auto const [q, r] = div_rem(x, y);
            Big const qy = big(q) * big(y);
            t.expect(
                qy <= big(x) && big(x) - qy < big(y) && qy + big(r) == big(x) &&
                    r < y,
                [&] { return "div_rem" + args(x, y); });
        };
        Nat const n = grid(b, 64, 16);
        for (Nat x = 0; x <= n; ++x) {
            for (Nat y = 1; y <= n; ++y) {
                check(x, y);
            }
        }
        Rng rng(b.seed + 1);
        for (std::uint64_t i = 0; i < b.samples; ++i) {
            Nat const x = rng.log_uniform_nat();
            Nat const y = positive(rng);
            check(x, y);
            Big const q = big(x) / big(y);
            t.expect(
                big(div_rem(x, y).quotient) == q,
                [&] { return "div_rem oracle" + args(x, y); });
        }
    }

    void div_maintains_gte(PropertyBudget const &b, Tally &t)
    {
        auto check = [&](Nat x, Nat y, Nat k) {
            t.expect(div_rem(x, k).quotient >= div_rem(y, k).quotient, [&] {
                return "x >= y but x/k < y/k" + args(x, y, k);
            });
        };
        Nat const n = grid(b, 64, 16);
        for (Nat x = 0; x <= n; ++x) {
            for (Nat y = 0; y <= x; ++y) {
                for (Nat k = 1; k <= n; ++k) {
                    check(x, y, k);
                }
            }
        }
        Rng rng(b.seed + 2);
        for (std::uint64_t i = 0; i < b.samples; ++i) {
            Nat x = rng.log_uniform_nat();
            Nat y = rng.log_uniform_nat();
            if (x < y) {
                std::swap(x, y);
            }
            Nat const k = positive(rng);
            check(x, y, k);
            t.expect(
                big(x / k) == big(x) / big(k), [&] { return "oracle" + args(x, k); });
        }
    }

    void div_maintains_gt(PropertyBudget const &b, Tally &t)
    {
        auto check = [&](Nat a, Nat bb, Nat k) {
            t.expect(div_rem(a, k).quotient > div_rem(bb, k).quotient, [&] {
                return "a >= b + k but a/k <= b/k" + args(a, bb, k);
            });
        };
        Nat const n = grid(b, 64, 16);
        for (Nat k = 1; k <= n; ++k) {
            for (Nat bb = 0; bb <= n; ++bb) {
                for (Nat a = bb + k; a <= 2 * n + k; ++a) {
                    check(a, bb, k);
                }
            }
        }
        Rng rng(b.seed + 3);
        for (std::uint64_t i = 0; i < b.samples; ++i) {
            Nat const k = positive(rng);
            Nat const bb = rng.log_uniform_nat();
            Nat floor_a;
            if (__builtin_add_overflow(bb, k, &floor_a)) {
                --i;
                continue;
            }
            Nat const a = rng.uniform_nat(floor_a, kNatMax);
            check(a, bb, k);
        }
    }

    void mul_div_greater(PropertyBudget const &b, Tally &t)
    {
        auto check = [&](Nat x, Nat y, Nat k) {
            auto const r = try_mul_div(x, y, k);
            t.expect(!r || *r >= x, [&] { return "scaled below x" + args(x, y, k); });
        };
        Nat const n = grid(b, 64, 16);
        for (Nat x = 1; x <= n; ++x) {
            for (Nat k = 1; k <= n; ++k) {
                for (Nat y = k; y <= n; ++y) {
                    check(x, y, k);
                }
            }
        }
        Rng rng(b.seed + 4);
        for (std::uint64_t i = 0; i < b.samples; ++i) {
            Nat const x = positive(rng);
            Nat const k = positive(rng);
            Nat const y = rng.uniform_nat(k, rng.chance(1, 2) ? kNatMax : saturating_add(k, k >> rng.uniform(0, 8)));
            check(x, y, k);
            expect_oracle_mul_div(t, x, y, k);
        }
    }

    void mul_div_strictly_greater(PropertyBudget const &b, Tally &t)
    {
        auto check = [&](Nat x, Nat y, Nat k) {
            auto const r = try_mul_div(x, y, k);
            t.expect(!r || *r > x, [&] { return "not strictly above x" + args(x, y, k); });
        };
        Nat const n = grid(b, 64, 16);
        for (Nat x = 1; x <= n; ++x) {
            for (Nat k = 1; 2 * k <= n; ++k) {
                for (Nat y = 2 * k; y <= n; ++y) {
                    check(x, y, k);
                }
            }
        }
        Rng rng(b.seed + 5);
        for (std::uint64_t i = 0; i < b.samples; ++i) {
            Nat const x = positive(rng);
            Nat const k = rng.uniform_nat(1, std::max<Nat>(1, positive(rng) >> 1));
            Nat const y = rng.uniform_nat(2 * k, rng.chance(1, 2) ? kNatMax : saturating_add(2 * k, k >> rng.uniform(0, 8)));
            check(x, y, k);
            expect_oracle_mul_div(t, x, y, k);
        }
    }

    void mul_div_less(PropertyBudget const &b, Tally &t, bool strict)
    {
        auto check = [&](Nat x, Nat y, Nat k) {
            Nat const r = mul_div_floor(x, y, k);
            t.expect(strict ? r < x : r <= x, [&] {
                return std::string(strict ? "not strictly below x" : "above x") +
                       args(x, y, k);
            });
        };
        Nat const n = grid(b, 64, 16);
        for (Nat x = 1; x <= n; ++x) {
            for (Nat y = 1; y <= n; ++y) {
                for (Nat k = strict ? y + 1 : y; k <= n; ++k) {
                    check(x, y, k);
                }
            }
        }
        Rng rng(b.seed + (strict ? 7 : 6));
        for (std::uint64_t i = 0; i < b.samples; ++i) {
            Nat const x = positive(rng);
            Nat y = positive(rng);
            if (strict && y == kNatMax) {
                --y;
            }
            Nat const k = rng.uniform_nat(strict ? y + 1 : y, kNatMax);
            check(x, y, k);
            expect_oracle_mul_div(t, x, y, k);
        }
    }

    void div_lower_bound(PropertyBudget const &b, Tally &t)
    {
        auto check = [&](Nat a, Nat bb, Nat c) {
            t.expect(div_rem(a, c).quotient >= bb, [&] {
                return "a > b*c but a/c < b" + args(a, bb, c);
            });
        };
        Nat const n = grid(b, 64, 16);
        for (Nat c = 1; c <= n; ++c) {
            for (Nat bb = 0; bb <= n; ++bb) {
                for (Nat a = bb * c + 1; a <= bb * c + 2 * n; ++a) {
                    check(a, bb, c);
                }
            }
        }
        Rng rng(b.seed + 8);
        for (std::uint64_t i = 0; i < b.samples; ++i) {
            Nat const c = positive(rng);
            Nat const bb = rng.uniform_nat(0, (kNatMax - 1) / c);
            Nat const a = rng.uniform_nat(bb * c + 1, kNatMax);
            check(a, bb, c);
        }
    }

    // --------------------------------------------------------------- assets

    struct PriceSample
    {
        Nat w;
        PriceFraction price;
    };

    PriceSample random_price_sample(Rng &rng)
    {
        return {
            positive(rng),
            {.deposit_token_amount = rng.chance(1, 2) ? positive(rng) : rng.uniform(1, 1000),
             .sale_token_amount = rng.chance(1, 2) ? positive(rng) : rng.uniform(1, 1000)}};
    }

    std::optional<RoundTrip> try_round_trip(Nat w, PriceFraction const &p)
    {
        try {
            return round_trip_remainders(w, p);
        }
        catch (Error const &e) {
            if (e.kind() != ErrorKind::overflow) {
                throw;
            }
            return std::nullopt;
        }
    }

    template <typename Check>
    void price_grid_and_samples(
        PropertyBudget const &b, std::uint64_t salt, Tally &t, Check &&check)
    {
        Nat const n = grid(b, 64, 16);
        for (Nat w = 1; w <= n; ++w) {
            for (Nat d = 1; d <= n; ++d) {
                for (Nat s = 1; s <= n; ++s) {
                    check(w, PriceFraction{d, s});
                }
            }
        }
        Rng rng(b.seed + salt);
        for (std::uint64_t i = 0; i < b.samples; ++i) {
            auto const sample = random_price_sample(rng);
            if (!try_round_trip(sample.w, sample.price)) {
                --i; // forward conversion out of range; draw again
                continue;
            }
            check(sample.w, sample.price);
        }
        (void)t;
    }

    void round_trip_loss_equation(PropertyBudget const &b, Tally &t)
    {
        price_grid_and_samples(b, 10, t, [&](Nat w, PriceFraction const &p) {
            auto const rt = round_trip_remainders(w, p);
            Big const lhs = (big(w) - big(rt.reverted)) * big(p.sale_token_amount);
            t.expect(
                rt.reverted <= w && lhs == big(rt.rem1) + big(rt.rem2) &&
                    rt.rem1 < p.deposit_token_amount && rt.rem2 < p.sale_token_amount,
                [&] {
                    return "loss equation" +
                           args(w, p.deposit_token_amount, p.sale_token_amount);
                });
        });
    }

    void round_trip_bounds(PropertyBudget const &b, Tally &t)
    {
        price_grid_and_samples(b, 11, t, [&](Nat w, PriceFraction const &p) {
            auto const rt = round_trip_remainders(w, p);
            if (rt.assets == 0) {
                return;
            }
            Big const lhs = (big(w) - big(rt.reverted)) * big(p.sale_token_amount);
            t.expect(
                rt.reverted <= w &&
                    lhs < big(p.deposit_token_amount) + big(p.sale_token_amount),
                [&] {
                    return "round-trip bound" +
                           args(w, p.deposit_token_amount, p.sale_token_amount);
                });
        });
    }

    void assets_oracle(PropertyBudget const &b, Tally &t)
    {
        Rng rng(b.seed + 12);
        for (std::uint64_t i = 0; i < b.samples; ++i) {
            auto const s = random_price_sample(rng);
            auto const rt = try_round_trip(s.w, s.price);
            auto const expected = oracle::narrow(oracle::assets(big(s.w), s.price));
            t.expect((rt ? std::optional<Nat>(rt->assets) : std::nullopt) == expected, [&] {
                return "calculate_assets" + args(s.w, s.price.deposit_token_amount, s.price.sale_token_amount);
            });
            if (rt) {
                t.expect(
                    big(rt->reverted) == oracle::assets_revert(big(rt->assets), s.price),
                    [&] { return "calculate_assets_revert" + args(rt->assets); });
            }
        }
    }

    void price_lemmas(PropertyBudget const &b, Tally &t)
    {
        price_grid_and_samples(b, 13, t, [&](Nat w, PriceFraction const &p) {
            Nat const d = p.deposit_token_amount;
            Nat const s = p.sale_token_amount;
            Nat const assets = calculate_assets(w, p);
            auto const where = [&] { return args(w, d, s); };
            if (s >= d) {
                t.expect(assets >= w, [&] { return "non-disadvantageous" + where(); });
            }
            if (s / 2 >= d) {
                t.expect(assets > w, [&] { return "highly advantageous" + where(); });
            }
            if (s < d) {
                t.expect(assets < w, [&] { return "unfavorable" + where(); });
            }
            if (d >= s) {
                auto const reverted = try_mul_div(w, d, s);
                t.expect(!reverted || *reverted >= w, [&] { return "revert >= w" + where(); });
            }
        });
    }

    void revert_monotonic(PropertyBudget const &b, Tally &t)
    {
        Nat const n = grid(b, 64, 16);
        for (Nat d = 1; d <= n; ++d) {
            for (Nat s = 1; s <= n; ++s) {
                PriceFraction const p{d, s};
                Nat previous = 0;
                for (Nat w = 0; w <= 4 * n; ++w) {
                    Nat const r = calculate_assets_revert(w, p);
                    t.expect(r >= previous, [&] { return "revert not monotone" + args(w, d, s); });
                    previous = r;
                }
            }
        }
        Rng rng(b.seed + 14);
        for (std::uint64_t i = 0; i < b.samples; ++i) {
            PriceFraction const p{positive(rng), positive(rng)};
            Nat w1 = rng.log_uniform_nat();
            Nat w2 = rng.log_uniform_nat();
            if (w1 > w2) {
                std::swap(w1, w2);
            }
            auto const r1 = try_mul_div(w1, p.deposit_token_amount, p.sale_token_amount);
            auto const r2 = try_mul_div(w2, p.deposit_token_amount, p.sale_token_amount);
            t.expect(!r2 || (r1 && *r1 <= *r2), [&] {
                return "revert not monotone" + args(w1, w2, p.deposit_token_amount, p.sale_token_amount);
            });
        }
    }

    // ------------------------------------------------------------ discounts

    constexpr Nat kRoundTripPercentages[] = {1, 100, 500, 9999, 10000};

    void weighted_bounds(PropertyBudget const &b, Tally &t)
    {
        Nat const n = grid(b, 64, 8);
        Nat const step = b.full_grids ? 1 : 97;
        for (Nat a = 1; a <= n; ++a) {
            for (Nat p = 1; p <= kMultiplier; p += step) {
                Nat const w = calculate_weighted_amount(a, p);
                t.expect(w >= a, [&] { return "weighted below amount" + args(a, p); });
                Nat const o = calculate_original_amount(a, p);
                t.expect(o <= a, [&] { return "original above amount" + args(a, p); });
            }
        }
        Rng rng(b.seed + 20);
        for (std::uint64_t i = 0; i < b.samples; ++i) {
            Nat const a = positive(rng) >> 14 | 1;
            Nat const p = rng.uniform(1, 10000);
            Nat const w = calculate_weighted_amount(a, p);
            Nat const o = calculate_original_amount(a, p);
            t.expect(w >= a && o <= a, [&] { return "weighting bounds" + args(a, p); });
            Config cfg{.start_date = 0, .end_date = 2, .mechanic = PriceDiscovery{},
                       .sale_amount = 1, .total_sale_amount = 1, .soft_cap = 0,
                       .discounts = {{0, 1, p}}, .vesting = std::nullopt,
                       .distribution_proportions = {IntentAccount("solver"), {}}};
            t.expect(
                big(w) == oracle::weighted(big(a), 0, cfg) &&
                    big(o) == oracle::original(big(a), 0, cfg),
                [&] { return "weighting oracle" + args(a, p); });
        }
    }

    void primitive_round_trip(PropertyBudget const &b, Tally &t)
    {
        Nat const n = grid(b, 10000, 500);
        for (Nat const p : kRoundTripPercentages) {
            for (Nat a = 1; a <= n; ++a) {
                Nat const r = calculate_original_amount(calculate_weighted_amount(a, p), p);
                t.expect(r <= a && r + 1 >= a, [&] { return "O_A(W_A(a))" + args(a, p); });
            }
        }
        Rng rng(b.seed + 21);
        for (std::uint64_t i = 0; i < b.samples; ++i) {
            Nat const a = (positive(rng) >> 2) | 1;
            Nat const p = rng.uniform(1, 10000);
            Nat const r = calculate_original_amount(calculate_weighted_amount(a, p), p);
            t.expect(r <= a && r + 1 >= a, [&] { return "O_A(W_A(a))" + args(a, p); });
        }
    }

    Config discount_config(std::optional<Nat> percentage)
    {
        Config cfg{
            .start_date = 100,
            .end_date = 200,
            .mechanic = PriceDiscovery{},
            .sale_amount = 1000,
            .total_sale_amount = 1000,
            .soft_cap = 0,
            .discounts = {},
            .vesting = std::nullopt,
            .distribution_proportions = {IntentAccount("solver"), {}},
        };
        if (percentage) {
            cfg.discounts.push_back({100, 200, *percentage});
        }
        return cfg;
    }

    void composite_round_trip(PropertyBudget const &b, Tally &t)
    {
        Nat const n = grid(b, 10000, 500);
        std::vector<Config> configs{discount_config(std::nullopt)};
        for (Nat const p : kRoundTripPercentages) {
            configs.push_back(discount_config(p));
        }
        for (auto const &cfg : configs) {
            for (Nat const time : {Nat{150}, Nat{250}}) {
                for (Nat a = 1; a <= n; ++a) {
                    Nat const w = calculate_weighted_amount_spec(a, time, cfg);
                    Nat const r = calculate_original_amount_spec(w, time, cfg);
                    t.expect(r <= a && r + 1 >= a, [&] {
                        return "O_S(W_S(a))" + args(a, time);
                    });
                }
            }
        }
        Rng rng(b.seed + 22);
        for (std::uint64_t i = 0; i < b.samples; ++i) {
            Config const cfg = random_config(rng);
            Nat const a = (positive(rng) >> 2) | 1;
            Nat const time = rng.uniform(0, 2000);
            Nat const w = calculate_weighted_amount_spec(a, time, cfg);
            Nat const r = calculate_original_amount_spec(w, time, cfg);
            t.expect(r <= a && r + 1 >= a, [&] { return "O_S(W_S(a))" + args(a, time); });
        }
    }

    void spec_monotonic(PropertyBudget const &b, Tally &t)
    {
        Rng rng(b.seed + 23);
        for (std::uint64_t i = 0; i < b.samples; ++i) {
            Config const cfg = random_config(rng);
            Nat const time = rng.uniform(0, 2000);
            bool const small = rng.chance(1, 2);
            Nat a1 = small ? rng.uniform(1, 5000) : (positive(rng) >> 2) | 1;
            Nat a2 = small ? rng.uniform(1, 5000) : (positive(rng) >> 2) | 1;
            if (a1 > a2) {
                std::swap(a1, a2);
            }
            t.expect(
                calculate_weighted_amount_spec(a1, time, cfg) <=
                    calculate_weighted_amount_spec(a2, time, cfg),
                [&] { return "W_S not monotone" + args(a1, a2, time); });
            t.expect(
                calculate_original_amount_spec(a1, time, cfg) <=
                    calculate_original_amount_spec(a2, time, cfg),
                [&] { return "O_S not monotone" + args(a1, a2, time); });
        }
    }

    void unique_active(PropertyBudget const &b, Tally &t)
    {
        Rng rng(b.seed + 24);
        for (std::uint64_t i = 0; i < b.sequences * 10; ++i) {
            std::vector<Discount> ds(rng.uniform(0, 6));
            for (auto &d : ds) {
                d.start_date = rng.uniform(0, 30);
                d.end_date = d.start_date + rng.uniform(1, 10);
                d.percentage = rng.uniform(1, 10000);
            }
            bool brute = true;
            for (std::size_t x = 0; x < ds.size(); ++x) {
                for (std::size_t y = x + 1; y < ds.size(); ++y) {
                    brute = brute && (ds[x].end_date <= ds[y].start_date ||
                                      ds[y].end_date <= ds[x].start_date);
                }
            }
            bool const fast = discounts_do_not_overlap(ds);
            t.expect(fast == brute, [&] { return std::string("overlap predicate disagrees"); });
            for (Nat time = 0; time <= 42; ++time) {
                std::optional<Discount> first;
                std::size_t active = 0;
                for (auto const &d : ds) {
                    if (d.start_date <= time && time < d.end_date) {
                        first = first ? first : std::optional<Discount>(d);
                        ++active;
                    }
                }
                if (brute) {
                    t.expect(active <= 1, [&] { return "two active discounts at " + show(time); });
                }
                t.expect(find_active_discount(ds, time) == first, [&] {
                    return "find_active_discount at " + show(time);
                });
            }
        }
    }

    // --------------------------------------------------------------- config

    void valid_config_clauses(PropertyBudget const &b, Tally &t)
    {
        Rng rng(b.seed + 30);
        for (std::uint64_t i = 0; i < b.sequences; ++i) {
            Config const base = random_config(rng);
            t.expect(valid_config(base), [&] {
                return "generated config invalid: " + validate_config(base).describe();
            });

            auto expect_only = [&](Config const &cfg, ConfigClause clause) {
                auto const v = validate_config(cfg);
                t.expect(
                    v.violated == std::vector<ConfigClause>{clause},
                    [&] { return "expected only " + std::string(to_string(clause)) +
                                 ", got: " + v.describe(); });
            };

            Config c = base;
            c.end_date = c.start_date;
            expect_only(c, ConfigClause::dates);

            c = base;
            c.mechanic = FixedPrice{{0, 1}};
            expect_only(c, ConfigClause::mechanics);

            c = base;
            c.discounts.push_back({c.start_date, c.start_date + 1, 0});
            expect_only(c, ConfigClause::discounts);
            if (!base.discounts.empty()) {
                c = base;
                c.discounts.push_back(base.discounts.front());
                expect_only(c, ConfigClause::discounts);
            }

            c = base;
            c.vesting = VestingSchedule{.cliff_period = 5, .vesting_period = 4};
            expect_only(c, ConfigClause::vesting);

            c = base;
            c.distribution_proportions.stakeholder_proportions.push_back(
                {c.distribution_proportions.solver_account, 7, std::nullopt});
            c.total_sale_amount += 7;
            expect_only(c, ConfigClause::stakeholders);

            c = base;
            c.total_sale_amount += 1;
            expect_only(c, ConfigClause::accounting);
        }
    }

    void stakeholder_lookup(PropertyBudget const &b, Tally &t)
    {
        Rng rng(b.seed + 31);
        for (std::uint64_t i = 0; i < b.sequences; ++i) {
            Config const cfg = random_config(rng);
            auto const &props = cfg.distribution_proportions;
            for (char const *name : {"team", "advisors", "fund", "treasury", "solver", "user0"}) {
                IntentAccount const account(name);
                auto const found = get_stakeholder_proportion(props, account);
                std::size_t matches = 0;
                for (auto const &p : props.stakeholder_proportions) {
                    if (p.account.str() == name) {
                        ++matches;
                        t.expect(found && *found == p, [&] { return "lookup missed " + std::string(name); });
                    }
                }
                if (matches == 0) {
                    t.expect(!found, [&] { return "lookup invented " + std::string(name); });
                }
            }
        }
    }

    // -------------------------------------------------------------- deposit

    void refund_safety(PropertyBudget const &b, Tally &t)
    {
        Nat const amounts = grid(b, 200, 40);
        Nat const prices = grid(b, 8, 4);
        Nat const caps = grid(b, 64, 16);
        std::vector<std::optional<Nat>> const percentages{std::nullopt, 1, 500, 10000};
        Nat const time = 150;

        for (auto const &pct : percentages) {
            for (Nat d = 1; d <= prices; ++d) {
                for (Nat s = 1; s <= prices; ++s) {
                    for (Nat cap = 1; cap <= caps; ++cap) {
                        Config cfg = discount_config(pct);
                        cfg.mechanic = FixedPrice{{d, s}};
                        cfg.sale_amount = cap;
                        cfg.total_sale_amount = cap;
                        PriceFraction const price{d, s};

                        // sold >= cap is outside the domain; the boundary
                        // must be rejected.
                        bool rejected = false;
                        try {
                            (void)deposit_fixed_price_spec(cfg, 1, 0, cap, time);
                        }
                        catch (Error const &e) {
                            rejected = e.kind() == ErrorKind::precondition_violation;
                        }
                        t.expect(rejected, [&] { return "sold-out deposit accepted" + args(cap); });

                        for (Nat sold = 1; sold < std::min(cap, amounts + 1); ++sold) {
                            for (Nat a = 1; a <= amounts; ++a) {
                                auto const o = deposit_fixed_price_spec(cfg, a, 0, sold, time);
                                Nat const assets = calculate_assets(
                                    calculate_weighted_amount_spec(a, time, cfg), price);
                                bool const over = sold + assets > cap;
                                t.expect(
                                    o.refund <= a && o.new_amount + o.refund == a &&
                                        o.new_total_sold <= cap &&
                                        (o.new_total_sold == cap) == (sold + assets >= cap) &&
                                        o.new_total_deposited == o.new_amount &&
                                        (over || o.refund == 0),
                                    [&] { return "deposit" + args(a, sold, d, s, cap) +
                                                 " refund " + show(o.refund); });
                            }
                        }
                    }
                }
            }
        }

        Rng rng(b.seed + 40);
        for (std::uint64_t i = 0; i < b.samples; ++i) {
            Config cfg = discount_config(
                rng.chance(1, 4) ? std::nullopt
                                 : std::optional<Nat>(rng.uniform(1, 10000)));
            PriceFraction const price{
                rng.chance(1, 2) ? positive(rng) >> 64 | 1 : rng.uniform(1, 1000),
                rng.chance(1, 2) ? positive(rng) >> 64 | 1 : rng.uniform(1, 1000)};
            cfg.mechanic = FixedPrice{price};
            cfg.sale_amount = rng.uniform_nat(2, Nat{1} << rng.uniform(1, 120));
            cfg.total_sale_amount = cfg.sale_amount;
            Nat const sold = rng.uniform_nat(0, cfg.sale_amount - 1);
            Nat const deposited = rng.uniform_nat(0, Nat{1} << 100);
            Nat const a = rng.uniform_nat(1, Nat{1} << rng.uniform(1, 100));
            Nat const time = rng.chance(3, 4) ? 150 : 250;

            DepositOutcome o;
            try {
                o = deposit_fixed_price_spec(cfg, a, deposited, sold, time);
            }
            catch (Error const &e) {
                if (e.kind() != ErrorKind::overflow) {
                    throw;
                }
                --i;
                continue;
            }
            auto const expected = oracle::deposit(cfg, big(a), big(deposited), big(sold), time);
            t.expect(
                o.refund <= a && o.new_amount + o.refund == a &&
                    o.new_total_sold <= cfg.sale_amount &&
                    big(o.refund) == expected.refund &&
                    big(o.weight_added) == expected.weight_added &&
                    big(o.new_total_deposited) == expected.new_total_deposited &&
                    big(o.new_total_sold) == expected.new_total_sold,
                [&] { return "wide deposit" + args(a, sold, price.deposit_token_amount,
                                                    price.sale_token_amount, cfg.sale_amount); });
        }
    }

    void price_discovery_deposit(PropertyBudget const &b, Tally &t)
    {
        Rng rng(b.seed + 41);
        for (std::uint64_t i = 0; i < b.samples; ++i) {
            Config cfg = discount_config(
                rng.chance(1, 3) ? std::nullopt
                                 : std::optional<Nat>(rng.uniform(1, 10000)));
            Nat const a = rng.uniform_nat(1, Nat{1} << rng.uniform(1, 110));
            Nat const deposited = rng.uniform_nat(0, Nat{1} << 110);
            Nat const sold = rng.uniform_nat(0, Nat{1} << 110);
            Nat const time = rng.uniform(50, 250);
            auto const o = deposit_spec(cfg, a, deposited, sold, time);
            auto const e = oracle::deposit(cfg, big(a), big(deposited), big(sold), time);
            t.expect(
                o == deposit_price_discovery_spec(cfg, a, deposited, sold, time) &&
                    big(o.new_amount) == e.new_amount &&
                    big(o.weight_added) == e.weight_added &&
                    big(o.new_total_deposited) == e.new_total_deposited &&
                    big(o.new_total_sold) == e.new_total_sold && o.refund == 0,
                [&] { return "price-discovery deposit" + args(a, deposited, sold, time); });

            cfg.mechanic = FixedPrice{{rng.uniform(1, 9), rng.uniform(1, 9)}};
            cfg.sale_amount = rng.uniform_nat(1, Nat{1} << 100);
            Nat const fp_sold = rng.uniform_nat(0, cfg.sale_amount - 1);
            t.expect(
                deposit_spec(cfg, a, deposited, fp_sold, time) ==
                    deposit_fixed_price_spec(cfg, a, deposited, fp_sold, time),
                [&] { return "dispatcher" + args(a, deposited, fp_sold, time); });
        }
    }

    // ------------------------------------------------------------- withdraw

    void withdraw_properties(PropertyBudget const &b, Tally &t)
    {
        Rng rng(b.seed + 50);
        for (std::uint64_t i = 0; i < b.samples; ++i) {
            Config const cfg = discount_config(
                rng.chance(1, 3) ? std::nullopt
                                 : std::optional<Nat>(rng.uniform(1, 10000)));
            Nat const t1 = rng.uniform(90, 260);
            Nat const t2 = rng.uniform(t1 < 100 ? 100 : t1, 260);
            Nat const principal = rng.uniform_nat(1, Nat{1} << rng.uniform(1, 100));
            Nat const claimed = rng.uniform(0, 100);
            InvestmentAmount const inv{
                principal, calculate_weighted_amount_spec(principal, t1, cfg), claimed};
            Nat const others = rng.uniform_nat(0, Nat{1} << 100);
            Nat const sold = inv.weight + others;
            Nat const a = rng.chance(1, 4) ? principal : rng.uniform_nat(1, principal);

            auto const r = withdraw_price_discovery_spec(cfg, inv, a, sold, t2);
            Nat const remaining = principal - a;
            Nat const bound =
                remaining == 0
                    ? 0
                    : std::max(
                          calculate_weighted_amount_spec(remaining, t1, cfg),
                          calculate_weighted_amount_spec(remaining, t2, cfg));
            t.expect(
                r.investment.amount == remaining && r.investment.weight <= inv.weight &&
                    r.investment.claimed == claimed &&
                    sold - r.sold == inv.weight - r.investment.weight &&
                    r.investment.weight <= bound,
                [&] { return "price-discovery withdraw" + args(principal, a, t1, t2); });

            auto const fp = withdraw_fixed_price_spec(inv, principal, sold);
            t.expect(
                fp.investment == InvestmentAmount{0, 0, claimed} && fp.sold == others,
                [&] { return "fixed-price withdraw" + args(principal, sold); });

            if (a != principal) {
                bool rejected = false;
                try {
                    (void)withdraw_fixed_price_spec(inv, a, sold);
                }
                catch (Error const &e) {
                    rejected = e.kind() == ErrorKind::precondition_violation;
                }
                t.expect(rejected, [&] { return "partial fixed-price withdraw accepted" + args(principal, a); });
            }
        }
    }

    // ---------------------------------------------------------------- claim

    void user_allocation(PropertyBudget const &b, Tally &t)
    {
        Rng rng(b.seed + 60);
        Config cfg = discount_config(std::nullopt);
        for (std::uint64_t i = 0; i < b.samples; ++i) {
            cfg.sale_amount = rng.uniform_nat(1, Nat{1} << rng.uniform(1, 127));
            Nat const sold = rng.uniform_nat(1, Nat{1} << rng.uniform(1, 127));
            Nat const w = rng.uniform_nat(0, sold);
            Nat const alloc = user_allocation_spec(w, sold, cfg);
            t.expect(alloc <= cfg.sale_amount, [&] { return "allocation above sale" + args(w, sold, cfg.sale_amount); });
            if (cfg.sale_amount <= sold) {
                t.expect(alloc <= w, [&] { return "allocation above weight" + args(w, sold, cfg.sale_amount); });
            }
            t.expect(
                big(alloc) == oracle::mul_div_floor(big(w), big(cfg.sale_amount), big(sold)),
                [&] { return "allocation oracle" + args(w, sold); });

            // random partition of sold
            std::vector<Nat> cuts{0, sold};
            for (std::uint64_t k = rng.uniform(0, 7); k > 0; --k) {
                cuts.push_back(rng.uniform_nat(0, sold));
            }
            std::sort(cuts.begin(), cuts.end());
            Big total = 0;
            for (std::size_t k = 1; k < cuts.size(); ++k) {
                total += big(user_allocation_spec(cuts[k] - cuts[k - 1], sold, cfg));
            }
            t.expect(total <= big(cfg.sale_amount), [&] { return "partition exceeds sale" + args(sold); });
        }
        Config fp = cfg;
        fp.mechanic = FixedPrice{{1, 1}};
        for (std::uint64_t i = 0; i < 100; ++i) {
            Nat const sold = rng.uniform_nat(0, kNatMax);
            Nat const w = rng.uniform_nat(0, sold);
            t.expect(user_allocation_spec(w, sold, fp) == w, [&] { return "fixed-price allocation" + args(w); });
        }
    }

    void vesting_curve(PropertyBudget const &b, Tally &t)
    {
        Rng rng(b.seed + 61);
        constexpr std::size_t kPoints = 1000;
        for (std::uint64_t i = 0; i < b.sequences; ++i) {
            bool const wide = rng.chance(1, 4);
            Nat const period = wide ? positive(rng) >> 1 | 1 : rng.uniform(1, 5000);
            Nat const cliff = rng.uniform_nat(0, period);
            Nat const total = wide ? rng.log_uniform_nat() : rng.uniform(0, 1'000'000);
            Nat const start = wide ? rng.uniform_nat(0, kNatMax >> 2) : rng.uniform(0, 10000);
            VestingContext const ctx{total, start, {cliff, period}};

            // 1000 points over [start - period/4, start + 5*period/4] that
            // always include the cliff and vesting boundaries.
            Nat const lo = start - std::min(start, period / 4);
            Nat const hi = start + period + period / 4;
            std::vector<Nat> times{start + cliff - (cliff > 0 ? 1 : 0), start + cliff,
                                   start + period - 1, start + period};
            Nat const span = hi - lo;
            for (std::size_t k = times.size(); k < kPoints; ++k) {
                times.push_back(lo + mul_div_floor(span, k, kPoints - 1));
            }
            std::sort(times.begin(), times.end());

            Nat previous = 0;
            for (std::size_t k = 0; k < times.size(); ++k) {
                Nat const v = calculate_vesting_spec(ctx, times[k]);
                t.expect(v >= previous && v <= total, [&] {
                    return "vesting" + args(total, start, cliff, period, times[k]);
                });
                previous = v;
            }
            Nat const probe = times[rng.uniform(0, kPoints - 1)];
            t.expect(
                big(calculate_vesting_spec(ctx, probe)) ==
                    oracle::vesting(big(total), big(start), big(probe), ctx.schedule),
                [&] { return "vesting oracle" + args(total, start, cliff, period, probe); });
        }
    }

    // --------------------------------------------------------- distribution

    std::vector<StakeholderProportion> proportions_named(std::vector<std::string> const &names)
    {
        std::vector<StakeholderProportion> out;
        for (auto const &n : names) {
            out.push_back({IntentAccount(n), 1, std::nullopt});
        }
        return out;
    }

    void check_filter(
        Tally &t, std::vector<StakeholderProportion> const &props,
        std::vector<IntentAccount> const &distributed)
    {
        auto const result = filter_distributed_stakeholders(props, distributed);
        std::set<IntentAccount> const paid(distributed.begin(), distributed.end());

        std::vector<IntentAccount> expected;
        for (auto const &p : props) {
            if (std::find(distributed.begin(), distributed.end(), p.account) == distributed.end()) {
                expected.push_back(p.account);
            }
        }
        std::set<IntentAccount> const result_set(result.begin(), result.end());
        std::set<IntentAccount> oracle_set;
        for (auto const &p : props) {
            if (!paid.contains(p.account)) {
                oracle_set.insert(p.account);
            }
        }
        bool sound = true;
        for (auto const &a : result) {
            bool const is_stakeholder = std::any_of(
                props.begin(), props.end(), [&](auto const &p) { return p.account == a; });
            sound = sound && is_stakeholder && !paid.contains(a);
        }
        bool complete = true;
        for (auto const &p : props) {
            if (!paid.contains(p.account)) {
                complete = complete && result_set.contains(p.account);
            }
        }
        t.expect(result_set == oracle_set, [] { return std::string("filter: set difference"); });
        t.expect(sound, [] { return std::string("filter: soundness"); });
        t.expect(complete, [] { return std::string("filter: completeness"); });
        t.expect(result_set.size() == result.size(), [] { return std::string("filter: uniqueness"); });
        t.expect(result == expected, [] { return std::string("filter: order"); });
    }

    void distribution_filter(PropertyBudget const &b, Tally &t)
    {
        std::size_t const max_n = b.full_grids ? 6 : 4;
        for (std::size_t n = 0; n <= max_n; ++n) {
            std::vector<std::string> names;
            for (std::size_t k = 0; k < n; ++k) {
                names.push_back("s" + std::to_string(k));
            }
            auto const props = proportions_named(names);
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                std::vector<IntentAccount> distributed;
                for (std::size_t k = 0; k < n; ++k) {
                    if (mask & (1u << k)) {
                        distributed.push_back(props[k].account);
                    }
                }
                check_filter(t, props, distributed);
                std::reverse(distributed.begin(), distributed.end());
                distributed.push_back(IntentAccount("solver"));
                distributed.push_back(IntentAccount("stranger"));
                if (!distributed.empty()) {
                    distributed.push_back(distributed.front());
                }
                check_filter(t, props, distributed);
            }
        }

        Rng rng(b.seed + 70);
        for (std::uint64_t i = 0; i < b.sequences; ++i) {
            std::size_t const n = rng.uniform(0, 100);
            std::vector<std::string> names;
            std::set<std::string> used;
            while (names.size() < n) {
                auto name = "acct" + std::to_string(rng.uniform(0, 400));
                if (used.insert(name).second) {
                    names.push_back(std::move(name));
                }
            }
            auto const props = proportions_named(names);
            std::vector<IntentAccount> distributed;
            for (std::uint64_t k = rng.uniform(0, 120); k > 0; --k) {
                distributed.emplace_back("acct" + std::to_string(rng.uniform(0, 400)));
            }
            check_filter(t, props, distributed);
        }
    }

    void solver_priority(PropertyBudget const &b, Tally &t)
    {
        Rng rng(b.seed + 71);
        for (std::uint64_t i = 0; i < b.sequences; ++i) {
            Config const cfg = random_config(rng);
            auto const &props = cfg.distribution_proportions;
            std::vector<IntentAccount> distributed;
            if (rng.chance(1, 2)) {
                distributed.push_back(props.solver_account);
            }
            for (auto const &p : props.stakeholder_proportions) {
                if (rng.chance(1, 2)) {
                    distributed.push_back(p.account);
                }
            }
            std::reverse(distributed.begin(), distributed.end());

            auto const queue = get_filtered_distributions_spec(cfg, distributed);
            auto const rest = filter_distributed_stakeholders(props.stakeholder_proportions, distributed);
            bool const solver_paid =
                std::find(distributed.begin(), distributed.end(), props.solver_account) !=
                distributed.end();
            DistributionQueue expected;
            if (!solver_paid) {
                expected.push_back(props.solver_account);
            }
            expected.insert(expected.end(), rest.begin(), rest.end());
            t.expect(queue == expected, [] { return std::string("solver priority"); });

            auto all = distributed;
            all.insert(all.end(), queue.begin(), queue.end());
            t.expect(
                get_filtered_distributions_spec(cfg, all).empty(),
                [] { return std::string("distribution not idempotent"); });
        }
    }

    // ------------------------------------------------------------ launchpad

    ContractState random_state(Rng &rng)
    {
        ContractState s = make_initialized_state(random_config(rng));
        s.is_sale_token_set = !rng.chance(1, 8);
        s.is_locked = rng.chance(1, 8);
        Nat const soft = s.config.soft_cap;
        s.total_deposited = rng.chance(1, 2) ? rng.uniform_nat(0, soft + 10) : rng.log_uniform_nat();
        return s;
    }

    Nat random_time(Rng &rng, Config const &cfg)
    {
        switch (rng.uniform(0, 4)) {
        case 0:
            return cfg.start_date;
        case 1:
            return cfg.end_date;
        case 2:
            return cfg.end_date - 1;
        default:
            return rng.uniform_nat(0, cfg.end_date + 500);
        }
    }

    void status_exclusive(PropertyBudget const &b, Tally &t)
    {
        Rng rng(b.seed + 80);
        for (std::uint64_t i = 0; i < b.sequences; ++i) {
            ContractState const s = random_state(rng);
            Nat const time = random_time(rng, s.config);
            auto const &c = s.config;
            bool const live = s.is_sale_token_set && !s.is_locked;
            bool const preds[] = {
                !s.is_sale_token_set,
                s.is_sale_token_set && s.is_locked,
                live && time < c.start_date,
                live && c.start_date <= time && time < c.end_date,
                live && time >= c.end_date && s.total_deposited >= c.soft_cap,
                live && time >= c.end_date && s.total_deposited < c.soft_cap,
            };
            SaleStatus const order[] = {
                SaleStatus::not_initialized, SaleStatus::locked, SaleStatus::not_started,
                SaleStatus::ongoing, SaleStatus::success, SaleStatus::failed};
            int holding = 0;
            std::optional<SaleStatus> which;
            for (int k = 0; k < 6; ++k) {
                if (preds[k]) {
                    ++holding;
                    which = order[k];
                }
            }
            SaleStatus const status = get_status(s, time);
            t.expect(holding == 1 && which == status, [&] {
                return "status predicates: " + std::to_string(holding) + " hold at " + show(time);
            });
            t.expect(
                !(status == SaleStatus::ongoing && status == SaleStatus::success),
                [] { return std::string("ongoing and success"); });
        }
    }

    void status_time_forward(PropertyBudget const &b, Tally &t)
    {
        Rng rng(b.seed + 81);
        for (std::uint64_t i = 0; i < b.sequences; ++i) {
            ContractState const s = random_state(rng);
            Nat const t1 = random_time(rng, s.config);
            if (get_status(s, t1) != SaleStatus::ongoing) {
                // force an ongoing sample half of the time
                if (rng.chance(1, 2)) {
                    continue;
                }
            }
            Nat const t2 = t1 >= s.config.end_date ? t1 : rng.uniform_nat(t1, s.config.end_date - 1);
            bool const premise = get_status(s, t1) == SaleStatus::ongoing && t2 < s.config.end_date;
            t.expect(!premise || get_status(s, t2) == SaleStatus::ongoing, [&] {
                return "ongoing did not persist" + args(t1, t2);
            });
        }
    }

    void status_terminal(PropertyBudget const &b, Tally &t)
    {
        Rng rng(b.seed + 82);
        for (std::uint64_t i = 0; i < b.sequences; ++i) {
            ContractState const s = random_state(rng);
            Nat const t1 = rng.chance(1, 2) ? s.config.end_date + rng.uniform(0, 10) : random_time(rng, s.config);
            Nat const t2 = rng.uniform_nat(t1, t1 + rng.log_uniform_nat() / 2);
            SaleStatus const first = get_status(s, t1);
            bool const terminal = first == SaleStatus::success ||
                                  first == SaleStatus::failed || first == SaleStatus::locked;
            t.expect(!terminal || get_status(s, t2) == first, [&] {
                return std::string(to_string(first)) + " left" + args(t1, t2);
            });
        }
    }

    void ledger_coherence(PropertyBudget const &b, Tally &t)
    {
        for (std::uint64_t i = 0; i < b.sequences; ++i) {
            Rng rng = Rng::for_case(b.seed + 83, i);
            Scenario const scenario = random_scenario(rng, 50);
            auto const report = replay(scenario);
            t.expect(report.invariant_violations.empty(), [&] {
                auto const &v = report.invariant_violations.front();
                return "sequence " + std::to_string(i) + ": " + v.invariant +
                       " after action " + std::to_string(v.action_index) + ": " + v.detail;
            });
        }
    }

    std::vector<PropertyCheck> build_checks()
    {
        return {
            {"arith.mul_div_oracle", {"Oracle agreement: mul_div_floor"}, mul_div_oracle},
            {"arith.div_mul_bounds", {"Lemma_DivMul_Bounds", "Property 3"}, div_mul_bounds},
            {"arith.div_maintains_gte", {"Lemma_Div_Maintains_GTE"}, div_maintains_gte},
            {"arith.div_maintains_gt", {"Lemma_Div_Maintains_GT"}, div_maintains_gt},
            {"arith.mul_div_greater", {"Lemma_MulDivGreater_From_Scratch", "Property 1"}, mul_div_greater},
            {"arith.mul_div_strictly_greater",
             {"Lemma_MulDivStrictlyGreater_From_Scratch", "Property 2"},
             mul_div_strictly_greater},
            {"arith.mul_div_less",
             {"Lemma_MulDivLess_From_Scratch"},
             [](PropertyBudget const &b, Tally &t) { mul_div_less(b, t, false); }},
            {"arith.mul_div_strictly_less",
             {"Lemma_MulDivStrictlyLess_From_Scratch"},
             [](PropertyBudget const &b, Tally &t) { mul_div_less(b, t, true); }},
            {"arith.div_lower_bound", {"Lemma_DivLowerBound_from_StrictMul"}, div_lower_bound},
            {"assets.round_trip_loss_equation", {"Lemma_RoundTripLossEquation"}, round_trip_loss_equation},
            {"assets.round_trip_bounds", {"Lemma_AssetsRevert_RoundTrip_bounds", "Property 4"}, round_trip_bounds},
            {"assets.oracle", {"Oracle agreement: asset conversion"}, assets_oracle},
            {"assets.price_lemmas",
             {"Lemma_CalculateAssets_IsGreaterOrEqual", "Lemma_CalculateAssets_IsGreater",
              "Lemma_CalculateAssets_IsLess", "Lemma_CalculateAssetsRevert_IsGreaterOrEqual"},
             price_lemmas},
            {"assets.revert_monotonic", {"Lemma_CalculateAssetsRevertSpec_Monotonic"}, revert_monotonic},
            {"discounts.weighting_bounds",
             {"Lemma_CalculateWeightedAmount_IsGreaterOrEqual",
              "Lemma_CalculateOriginalAmount_IsLessOrEqual", "Oracle agreement: discounts"},
             weighted_bounds},
            {"discounts.primitive_round_trip", {"Lemma_WeightOriginal_RoundTrip_lte"}, primitive_round_trip},
            {"discounts.unique_active",
             {"Lemma_UniqueActiveDiscount", "DiscountsDoNotOverlap", "Property 5",
              "FindActiveDiscountSpec"},
             unique_active},
            {"config.composite_round_trip", {"Lemma_WeightOriginal_RoundTrip_bounds"}, composite_round_trip},
            {"config.spec_monotonic",
             {"Lemma_CalculateWeightedAmountSpec_Monotonic",
              "Lemma_CalculateOriginalAmountSpec_Monotonic"},
             spec_monotonic},
            {"config.valid_config_clauses", {"ValidConfig"}, valid_config_clauses},
            {"config.stakeholder_lookup", {"GetStakeholderProportion"}, stakeholder_lookup},
            {"deposit.refund_safety",
             {"Lemma_RefundIsSafe", "Property 6", "Lemma_DepositFixedPrice_AmountConservation",
              "Oracle agreement: refunds"},
             refund_safety},
            {"deposit.price_discovery", {"DepositSpec dispatcher"}, price_discovery_deposit},
            {"withdraw.properties",
             {"WithdrawSpec dispatcher", "WithdrawFixedPriceSpec postconditions",
              "WithdrawPriceDiscoverySpec postconditions"},
             withdraw_properties},
            {"claim.user_allocation", {"Lemma_UserAllocationSpec"}, user_allocation},
            {"claim.vesting_curve",
             {"Lemma_CalculateVestingSpec_Properties", "Lemma_CalculateVestingSpec_Monotonic"},
             vesting_curve},
            {"distribution.filter",
             {"FilterDistributedStakeholders correctness", "FilterDistributedStakeholders soundness",
              "FilterDistributedStakeholders completeness",
              "FilterDistributedStakeholders uniqueness preservation"},
             distribution_filter},
            {"distribution.solver_priority", {"GetFilteredDistributionsSpec"}, solver_priority},
            {"launchpad.status_mutual_exclusion", {"Lemma_StatusIsMutuallyExclusive"}, status_exclusive},
            {"launchpad.status_time_forward", {"Lemma_StatusTimeMovesForward"}, status_time_forward},
            {"launchpad.status_terminal", {"Lemma_StatusFinalStatesAreTerminal"}, status_terminal},
            {"launchpad.ledger_coherence",
             {"Ledger coherence", "DepositSpec transition", "WithdrawSpec transition",
              "ClaimSpec transition", "ClaimIndividualVestingSpec transition",
              "DistributeTokensSpec transition"},
             ledger_coherence},
        };
    }
}

std::vector<PropertyCheck> const &property_checks()
{
    static std::vector<PropertyCheck> const checks = build_checks();
    return checks;
}

PropertyCheck const &find_check(std::string const &name)
{
    for (auto const &c : property_checks()) {
        if (c.name == name) {
            return c;
        }
    }
    fail(ErrorKind::precondition_violation, "unknown property check " + name);
}

PropertyResult run_check(PropertyCheck const &check, PropertyBudget const &budget)
{
    Tally tally;
    auto const begin = std::chrono::steady_clock::now();
    std::string crash;
    try {
        check.body(budget, tally);
    }
    catch (std::exception const &e) {
        crash = std::string("unexpected exception: ") + e.what();
    }
    auto const end = std::chrono::steady_clock::now();

    PropertyResult result{
        .name = check.name,
        .lemmas = check.lemmas,
        .cases = tally.cases(),
        .violations = tally.violations(),
        .counterexample = tally.counterexample(),
        .seconds = std::chrono::duration<double>(end - begin).count(),
    };
    if (!crash.empty()) {
        ++result.violations;
        result.counterexample = crash;
    }
    return result;
}

} // namespace launchpad::harness
