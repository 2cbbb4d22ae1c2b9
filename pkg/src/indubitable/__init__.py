# indubitable
