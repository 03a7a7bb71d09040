#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>

#include "pseudospin/asymptotics.hpp"
#include "pseudospin/errors.hpp"
#include "pseudospin/fieldmap.hpp"
#include "pseudospin/lattice.hpp"
#include "pseudospin/parallel.hpp"
#include "pseudospin/resonance.hpp"

namespace pseudospin::cli
{
namespace
{
constexpr double nan = std::numeric_limits<double>::quiet_NaN();

std::string num(double v)
{
    if (std::isnan(v))
        return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_num(double v)
{
    return std::isfinite(v) ? num(v) : "null";
}

std::string json_array(std::vector<double> const& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + json_num(v[i]);
    return s + "]";
}

std::string json_str(std::string const& s)
{
    return nlohmann::json(s).dump();
}

ParticleKind parse_kind(std::string const& name)
{
    return name == "spinhalf" ? ParticleKind::spinhalf : ParticleKind::spin1;
}

struct Output
{
    std::string path = "-";
    std::string format = "csv";
};

void add_output(CLI::App* sub, Output& o, std::string default_format)
{
    o.format = std::move(default_format);
    sub->add_option("--out", o.path, "Output file, '-' for standard output")
        ->capture_default_str();
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

void add_kind(CLI::App* sub, std::string& kind)
{
    sub->add_option("--kind", kind, "Particle kind")
        ->check(CLI::IsMember({"spin1", "spinhalf"}))
        ->capture_default_str();
}

void emit(std::string const& text, Output const& o, std::ostream& out)
{
    if (o.path.empty() || o.path == "-")
    {
        out << text;
        return;
    }
    std::ofstream file(o.path, std::ios::binary);
    file << text;
    if (!file)
        throw UsageError("cannot write output file '" + o.path + "'");
}

struct Result
{
    std::string text;
    std::vector<std::string> failures;
};

//---------------------------------------------------------------------------//
// sweep
//---------------------------------------------------------------------------//
struct SweepArgs
{
    double rho = 0.1;
    double x_min = 0.005;
    double x_max = 0.1;
    int n = 2000;
    std::string kind = "spin1";
    bool log = false;
    Output out;
};

Result cmd_sweep(SweepArgs const& a)
{
    if (!(a.x_min > 0.0) || !(a.x_min <= a.x_max) || a.n < 1
        || !std::isfinite(a.rho) || !std::isfinite(a.x_max))
        throw UsageError("sweep: need 0 < x-min <= x-max and n >= 1");
    resonance::Range const range{a.x_min, a.x_max};
    auto const xs = a.log ? resonance::log_axis(range, a.n)
                          : resonance::linear_axis(range, a.n);
    auto const kind = parse_kind(a.kind);

    struct Row
    {
        double total = nan;
        double transport = nan;
        double closed = nan;
        double closed_total = nan;
        bool masked = false;
        std::string error;
    };
    std::vector<Row> rows(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) {
        double const x = xs[i];
        Row& r = rows[i];
        if (std::abs(x - a.rho) < resonance::mask_threshold)
        {
            r.masked = true;
            return;
        }
        try
        {
            auto const cs = resonance::exact(kind, a.rho, x);
            r.total = cs.total;
            r.transport = cs.transport;
            r.closed = asymptotics::transport_closed(a.rho, x);
            r.closed_total = asymptotics::total_closed(a.rho, x);
        }
        catch (DomainError const& e)
        {
            r.error = e.what();
        }
    });

    Result res;
    std::vector<double> masked;
    for (std::size_t i = 0; i < xs.size(); ++i)
    {
        if (rows[i].masked)
            masked.push_back(xs[i]);
        if (!rows[i].error.empty())
            res.failures.push_back("sweep: rho=" + num(a.rho) + " x=" + num(xs[i])
                                   + ": " + rows[i].error);
    }

    std::ostringstream s;
    if (a.out.format == "csv")
    {
        s << "# sweep kind=" << a.kind << " rho=" << num(a.rho) << " n=" << a.n
          << " spacing=" << (a.log ? "log" : "linear") << "\n";
        s << "# closed-form columns are the spin-1 low-energy approximations\n";
        for (double x : masked)
            s << "# masked |x - rho| < 1e-6: x=" << num(x) << "\n";
        s << "x,sigma_total_over_R,sigma_transport_over_R,sigma_closed_eq5,"
             "sigma_total_closed_appB\n";
        for (std::size_t i = 0; i < xs.size(); ++i)
        {
            auto const& r = rows[i];
            s << num(xs[i]) << ',' << num(r.total) << ',' << num(r.transport)
              << ',' << num(r.closed) << ',' << num(r.closed_total) << '\n';
        }
    }
    else
    {
        s << "{\"command\":\"sweep\",\"kind\":" << json_str(a.kind)
          << ",\"rho\":" << json_num(a.rho) << ",\"spacing\":"
          << (a.log ? "\"log\"" : "\"linear\"")
          << ",\"columns\":[\"x\",\"sigma_total_over_R\",\"sigma_transport_over_R\","
             "\"sigma_closed_eq5\",\"sigma_total_closed_appB\"],\"rows\":[";
        for (std::size_t i = 0; i < xs.size(); ++i)
        {
            auto const& r = rows[i];
            s << (i ? "," : "") << '[' << json_num(xs[i]) << ','
              << json_num(r.total) << ',' << json_num(r.transport) << ','
              << json_num(r.closed) << ',' << json_num(r.closed_total) << ']';
        }
        s << "]}\n";
    }
    res.text = s.str();
    return res;
}

//---------------------------------------------------------------------------//
// map
//---------------------------------------------------------------------------//
struct MapArgs
{
    double rho_min = 0.02;
    double rho_max = 1.0;
    double x_min = 0.005;
    double x_max = 0.5;
    int n_rho = 101;
    int n_x = 101;
    std::string kind = "spin1";
    Output out;
};

Result cmd_map(MapArgs const& a)
{
    if (!(a.rho_min <= a.rho_max) || !(a.x_min > 0.0) || !(a.x_min <= a.x_max)
        || a.n_rho < 1 || a.n_x < 1 || !std::isfinite(a.rho_min)
        || !std::isfinite(a.rho_max) || !std::isfinite(a.x_max))
        throw UsageError("map: need rho-min <= rho-max, 0 < x-min <= x-max and "
                         "positive resolutions");
    auto const m = resonance::map({a.rho_min, a.rho_max}, {a.x_min, a.x_max},
                                  a.n_rho, a.n_x, parse_kind(a.kind));
    Result res;
    for (auto const& [r, x] : m.failed)
        res.failures.push_back("map: rho=" + num(r) + " x=" + num(x)
                               + ": solver domain error");

    auto value = [&](std::size_t ix, std::size_t ir) {
        auto const v = m.at(ix, ir);
        return v ? *v : nan;
    };

    std::ostringstream s;
    if (a.out.format == "json")
    {
        s << "{\"command\":\"map\",\"kind\":" << json_str(a.kind)
          << ",\"quantity\":\"log10_sigma_transport_over_R\""
          << ",\"rho_axis\":" << json_array(m.rho_axis)
          << ",\"x_axis\":" << json_array(m.x_axis) << ",\"values\":[";
        for (std::size_t ix = 0; ix < m.x_axis.size(); ++ix)
        {
            s << (ix ? "," : "") << '[';
            for (std::size_t ir = 0; ir < m.rho_axis.size(); ++ir)
                s << (ir ? "," : "") << json_num(value(ix, ir));
            s << ']';
        }
        s << "],\"markers\":{";
        bool first_family = true;
        for (auto family : {resonance::MarkerFamily::j0_zero,
                            resonance::MarkerFamily::j1_zero,
                            resonance::MarkerFamily::revival})
        {
            s << (first_family ? "" : ",") << '"' << resonance::to_string(family)
              << "\":[";
            first_family = false;
            bool first = true;
            for (auto const& mk : m.markers)
            {
                if (mk.family != family)
                    continue;
                s << (first ? "" : ",") << '[' << json_num(mk.rho) << ','
                  << json_num(mk.x) << ']';
                first = false;
            }
            s << ']';
        }
        s << "}}\n";
    }
    else
    {
        s << "# map kind=" << a.kind << " n_rho=" << m.rho_axis.size()
          << " n_x=" << m.x_axis.size() << "\n";
        s << "rho,x,log10_sigma_transport_over_R\n";
        for (std::size_t ix = 0; ix < m.x_axis.size(); ++ix)
        {
            for (std::size_t ir = 0; ir < m.rho_axis.size(); ++ir)
                s << num(m.rho_axis[ir]) << ',' << num(m.x_axis[ix]) << ','
                  << num(value(ix, ir)) << '\n';
        }
        for (auto const& mk : m.markers)
            s << "# marker " << resonance::to_string(mk.family) << ' '
              << num(mk.rho) << ' ' << num(mk.x) << '\n';
    }
    res.text = s.str();
    return res;
}

//---------------------------------------------------------------------------//
// field
//---------------------------------------------------------------------------//
struct FieldArgs
{
    std::string kind = "spin1";
    double rho = 0.5;
    double x = 0.2485;
    std::string quantity = "re_psi2";
    double extent = 1.5;
    int res = 512;
    Output out;
};

Result cmd_field(FieldArgs const& a)
{
    if (!(a.x > 0.0) || !(a.extent > 0.0) || a.res < 16 || !std::isfinite(a.rho)
        || !std::isfinite(a.x) || !std::isfinite(a.extent))
        throw UsageError("field: need x > 0, extent > 0 and res >= 16");
    fieldmap::MapRequest req;
    req.kind = parse_kind(a.kind);
    req.config = {a.rho, a.x, +1};
    req.extent = a.extent;
    req.nx = a.res;
    req.ny = a.res;
    req.quantity = fieldmap::parse_quantity(a.quantity);
    auto const map = fieldmap::render(req);

    std::ostringstream s;
    if (a.out.format == "json")
    {
        s << "{\"command\":\"field\",\"kind\":" << json_str(a.kind)
          << ",\"quantity\":" << json_str(a.quantity) << ",\"rho\":"
          << json_num(a.rho) << ",\"x\":" << json_num(a.x)
          << ",\"axis_unit\":\"wavelength\",\"wavelength_over_R\":"
          << json_num(map.wavelength) << ",\"disk_radius\":"
          << json_num(map.disk_radius) << ",\"x_axis\":" << json_array(map.x_axis)
          << ",\"y_axis\":" << json_array(map.y_axis) << ",\"values\":[";
        for (int j = 0; j < req.ny; ++j)
        {
            s << (j ? "," : "") << '[';
            for (int i = 0; i < req.nx; ++i)
                s << (i ? "," : "") << json_num(map.at(i, j));
            s << ']';
        }
        s << "]}\n";
    }
    else
    {
        s << "# field kind=" << a.kind << " quantity=" << a.quantity
          << " rho=" << num(a.rho) << " x=" << num(a.x) << "\n";
        s << "# axes in incident wavelengths; wavelength_over_R="
          << num(map.wavelength) << " disk_radius=" << num(map.disk_radius)
          << "\n";
        s << "x,y,value\n";
        for (int j = 0; j < req.ny; ++j)
        {
            for (int i = 0; i < req.nx; ++i)
            {
                s << num(map.x_axis[static_cast<std::size_t>(i)]) << ','
                  << num(map.y_axis[static_cast<std::size_t>(j)]) << ','
                  << num(map.at(i, j)) << '\n';
            }
        }
    }
    return {s.str(), {}};
}

//---------------------------------------------------------------------------//
// bands
//---------------------------------------------------------------------------//
struct BandsArgs
{
    std::string path = "G-X-M-G";
    int points = 100;
    double beta0 = 0.0;
    double kappa_x = 1.0;
    double kappa_y = 1.0;
    Output out;
};

Result cmd_bands(BandsArgs const& a)
{
    std::vector<lattice::KPoint> kpath;
    try
    {
        kpath = lattice::high_symmetry_path(a.path, a.points);
    }
    catch (DomainError const& e)
    {
        throw UsageError(std::string("bands: ") + e.what());
    }
    if (!(a.kappa_x > 0.0) || !(a.kappa_y > 0.0))
        throw UsageError("bands: couplings must be positive");
    auto const bs = lattice::bands(kpath, {a.beta0, a.kappa_x, a.kappa_y});

    std::ostringstream s;
    if (a.out.format == "json")
    {
        s << "{\"command\":\"bands\",\"path\":" << json_str(a.path)
          << ",\"beta0\":" << json_num(a.beta0) << ",\"kappa_x\":"
          << json_num(a.kappa_x) << ",\"kappa_y\":" << json_num(a.kappa_y)
          << ",\"columns\":[\"t\",\"kx\",\"ky\",\"lower\",\"flat\",\"upper\"],"
             "\"rows\":[";
    }
    else
    {
        s << "# bands path=" << a.path << " beta0=" << num(a.beta0)
          << " kappa_x=" << num(a.kappa_x) << " kappa_y=" << num(a.kappa_y)
          << "\n";
        s << "t,kx,ky,lower,flat,upper\n";
    }
    for (std::size_t i = 0; i < kpath.size(); ++i)
    {
        std::vector<double> const row{bs.parameter[i], kpath[i].kx, kpath[i].ky,
                                      bs.bands[i][0], bs.bands[i][1],
                                      bs.bands[i][2]};
        if (a.out.format == "json")
        {
            s << (i ? "," : "") << json_array(row);
            continue;
        }
        for (std::size_t c = 0; c < row.size(); ++c)
            s << (c ? "," : "") << num(row[c]);
        s << '\n';
    }
    if (a.out.format == "json")
        s << "]}\n";
    return {s.str(), {}};
}

//---------------------------------------------------------------------------//
// peaks
//---------------------------------------------------------------------------//
struct PeaksArgs
{
    std::string rho = "0.05,0.1,0.2";
    std::string kind = "spin1";
    double x_min = nan;
    double x_max = nan;
    int n = 2000;
    Output out;
};

std::vector<double> parse_list(std::string const& text, char const* who)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        try
        {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos)
                throw std::invalid_argument(item);
        }
        catch (std::exception const&)
        {
            throw UsageError(std::string(who) + ": cannot parse number '" + item + "'");
        }
    }
    if (out.empty())
        throw UsageError(std::string(who) + ": empty list");
    return out;
}

Result cmd_peaks(PeaksArgs const& a)
{
    auto const rhos = parse_list(a.rho, "peaks --rho");
    if (a.n < 3)
        throw UsageError("peaks: n must be at least 3");
    auto const kind = parse_kind(a.kind);
    std::string const columns = "rho,x_peak,height,fwhm,quality,"
                                "prediction_16_over_rho,prediction_width,"
                                "prediction_born,status";
    Result res;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> status;
    for (double rho : rhos)
    {
        if (!(rho > 0.0) || !std::isfinite(rho))
            throw UsageError("peaks: rho values must be positive");
        double const lo = std::isnan(a.x_min) ? rho / 100.0 : a.x_min;
        double const hi = std::isnan(a.x_max) ? rho * (1.0 - 1e-4) : a.x_max;
        if (!(lo > 0.0) || !(lo < hi))
            throw UsageError("peaks: need 0 < x-min < x-max");

        double pmax = nan, pwidth = nan, pborn = nan;
        if (rho < 1.0)
        {
            auto const p = asymptotics::peak_predictions(rho);
            pmax = p.max_transport;
            pwidth = p.width;
            pborn = p.born_max;
        }
        try
        {
            auto const pk = resonance::sweep_peak(rho, {lo, hi}, kind, a.n);
            rows.push_back({rho, pk.x_peak, pk.height, pk.fwhm, pk.quality, pmax,
                            pwidth, pborn});
            status.emplace_back("peak");
        }
        catch (NoPeak const&)
        {
            auto const m = resonance::sweep_max(rho, {lo, hi}, kind, a.n);
            rows.push_back({rho, m.x, m.height, nan, nan, pmax, pwidth, pborn});
            status.emplace_back("no_peak");
        }
    }

    std::ostringstream s;
    if (a.out.format == "json")
    {
        s << "{\"command\":\"peaks\",\"kind\":" << json_str(a.kind)
          << ",\"columns\":[";
        std::stringstream cs(columns);
        std::string c;
        for (bool first = true; std::getline(cs, c, ','); first = false)
            s << (first ? "" : ",") << json_str(c);
        s << "],\"rows\":[";
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            std::string row = json_array(rows[i]);
            row.pop_back();
            s << (i ? "," : "") << row << ',' << json_str(status[i]) << ']';
        }
        s << "]}\n";
    }
    else
    {
        s << "# peaks kind=" << a.kind << " n=" << a.n << "\n" << columns << "\n";
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            for (double v : rows[i])
                s << num(v) << ',';
            s << status[i] << '\n';
        }
    }
    res.text = s.str();
    return res;
}

std::string config_value(nlohmann::json const& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    if (v.is_number())
        return num(v.get<double>());
    if (v.is_array())
    {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + config_value(v[i]);
        return s;
    }
    throw UsageError("config: unsupported value " + v.dump());
}
} // namespace

std::vector<std::string> expand_config(std::vector<std::string> const& args)
{
    std::vector<std::string> rest;
    std::string path;
    bool found = false;
    for (std::size_t i = 0; i < args.size(); ++i)
    {
        if (i > 0 && args[i] == "--config")
        {
            if (i + 1 >= args.size())
                throw UsageError("--config needs a file name");
            path = args[++i];
            found = true;
        }
        else if (i > 0 && args[i].rfind("--config=", 0) == 0)
        {
            path = args[i].substr(9);
            found = true;
        }
        else
        {
            rest.push_back(args[i]);
        }
    }
    if (!found)
        return args;

    std::ifstream file(path);
    if (!file)
        throw UsageError("cannot read config file '" + path + "'");
    nlohmann::json doc;
    try
    {
        doc = nlohmann::json::parse(file);
    }
    catch (nlohmann::json::exception const& e)
    {
        throw UsageError("config file '" + path + "': " + e.what());
    }
    if (!doc.is_object())
        throw UsageError("config file '" + path + "' must hold a JSON object");

    std::vector<std::string> flags;
    std::string command;
    for (auto const& [key, value] : doc.items())
    {
        if (key == "command")
        {
            command = config_value(value);
            continue;
        }
        std::string const flag = "--" + key.substr(key.find_first_not_of('-'));
        if (value.is_boolean())
        {
            if (value.get<bool>())
                flags.push_back(flag);
            continue;
        }
        flags.push_back(flag);
        flags.push_back(config_value(value));
    }

    auto sub = std::find_if(rest.begin() + (rest.empty() ? 0 : 1), rest.end(),
                            [](std::string const& s) {
                                return !s.empty() && s.front() != '-';
                            });
    if (sub == rest.end())
    {
        if (command.empty())
            throw UsageError("config: no subcommand given");
        rest.insert(rest.begin() + (rest.empty() ? 0 : 1), command);
        sub = rest.begin() + 1;
    }
    rest.insert(std::next(sub), flags.begin(), flags.end());
    return rest;
}

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Partial-wave scattering of pseudospin-1 and pseudospin-1/2 "
                 "waves from a circular step potential",
                 "pseudospin"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.add_option("--config")->description(
        "JSON file supplying any flag; the command line overrides it");

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Cross sections along x at fixed rho");
    sweep->add_option("--rho", sweep_args.rho, "Barrier strength V0 R")->capture_default_str();
    sweep->add_option("--x-min", sweep_args.x_min, "Smallest kR")->capture_default_str();
    sweep->add_option("--x-max", sweep_args.x_max, "Largest kR")->capture_default_str();
    sweep->add_option("--n", sweep_args.n, "Number of points")->capture_default_str();
    sweep->add_flag("--log", sweep_args.log, "Geometric spacing in x");
    add_kind(sweep, sweep_args.kind);
    add_output(sweep, sweep_args.out, "csv");

    MapArgs map_args;
    auto* map = app.add_subcommand("map", "log10 transport cross section over (rho, x)");
    map->add_option("--rho-min", map_args.rho_min)->capture_default_str();
    map->add_option("--rho-max", map_args.rho_max)->capture_default_str();
    map->add_option("--x-min", map_args.x_min)->capture_default_str();
    map->add_option("--x-max", map_args.x_max)->capture_default_str();
    map->add_option("--n-rho", map_args.n_rho, "Points along rho")->capture_default_str();
    map->add_option("--n-x", map_args.n_x, "Points along x")->capture_default_str();
    add_kind(map, map_args.kind);
    add_output(map, map_args.out, "json");

    FieldArgs field_args;
    auto* field = app.add_subcommand("field", "Near-field raster around the scatterer");
    field->add_option("--rho", field_args.rho)->capture_default_str();
    field->add_option("--x", field_args.x, "kR")->capture_default_str();
    field->add_option("--quantity", field_args.quantity)
        ->check(CLI::IsMember({"re_psi2", "density", "current_x", "current_y"}))
        ->capture_default_str();
    field->add_option("--extent", field_args.extent,
                      "Half-width in incident wavelengths")
        ->capture_default_str();
    field->add_option("--res", field_args.res, "Points per axis")->capture_default_str();
    add_kind(field, field_args.kind);
    add_output(field, field_args.out, "csv");

    BandsArgs bands_args;
    auto* bands = app.add_subcommand("bands", "Tight-binding bands along a k path");
    bands->add_option("--path", bands_args.path, "Labels from G, X, Y, M")
        ->capture_default_str();
    bands->add_option("--points", bands_args.points, "Samples per segment")
        ->capture_default_str();
    bands->add_option("--beta0", bands_args.beta0)->capture_default_str();
    bands->add_option("--kx", bands_args.kappa_x, "Coupling kappa_x")->capture_default_str();
    bands->add_option("--ky", bands_args.kappa_y, "Coupling kappa_y")->capture_default_str();
    add_output(bands, bands_args.out, "csv");

    PeaksArgs peaks_args;
    auto* peaks = app.add_subcommand("peaks", "Resonance peak, width and predictions per rho");
    peaks->add_option("--rho", peaks_args.rho, "Comma-separated strengths")
        ->capture_default_str();
    peaks->add_option("--x-min", peaks_args.x_min, "Default rho/100");
    peaks->add_option("--x-max", peaks_args.x_max, "Default rho (1 - 1e-4)");
    peaks->add_option("--n", peaks_args.n, "Sweep points")->capture_default_str();
    add_kind(peaks, peaks_args.kind);
    add_output(peaks, peaks_args.out, "csv");

    try
    {
        auto const expanded = expand_config(args);
        std::vector<std::string> reversed(expanded.rbegin(),
                                          expanded.rend() - (expanded.empty() ? 0 : 1));
        app.parse(reversed);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    catch (UsageError const& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try
    {
        Result res;
        Output const* o = nullptr;
        if (sweep->parsed())
        {
            res = cmd_sweep(sweep_args);
            o = &sweep_args.out;
        }
        else if (map->parsed())
        {
            res = cmd_map(map_args);
            o = &map_args.out;
        }
        else if (field->parsed())
        {
            res = cmd_field(field_args);
            o = &field_args.out;
        }
        else if (bands->parsed())
        {
            res = cmd_bands(bands_args);
            o = &bands_args.out;
        }
        else
        {
            res = cmd_peaks(peaks_args);
            o = &peaks_args.out;
        }
        emit(res.text, *o, out);
        for (auto const& f : res.failures)
            err << f << "\n";
        return res.failures.empty() ? exit_ok : exit_domain;
    }
    catch (UsageError const& e)
    {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (DomainError const& e)
    {
        err << "domain error: " << e.what() << "\n";
        return exit_domain;
    }
    catch (NoPeak const& e)
    {
        err << "domain error: " << e.what() << "\n";
        return exit_domain;
    }
}
} // namespace pseudospin::cli
